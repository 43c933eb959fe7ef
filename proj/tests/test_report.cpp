#include <doctest.h>

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "s4/error.hpp"
#include "s4/report.hpp"

using namespace s4;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("golden JSON") {
    CHECK(to_json(compute_field(-2, -6, true)).dump(2) + "\n" == read_file(S4_GOLDEN_DIR "/compute_-2_-6.json"));
    CHECK(to_json(compute_field(17, 33, true)).dump(2) + "\n" == read_file(S4_GOLDEN_DIR "/compute_17_33.json"));
    CHECK(to_json(compute_field(2, -34, false)).dump(2) + "\n" == read_file(S4_GOLDEN_DIR "/compute_2_-34.json"));
}

TEST_CASE("field report") {
    const FieldReport r = compute_field(17, 33, true);
    CHECK(r.consistent());
    CHECK(r.primes.size() == 4);
    CHECK(r.lower_bound == 15);
    for (const auto& p : r.primes) {
        CHECK(p.oracle_s == 15u);
        CHECK(p.oracle_s_3e1 == 15u);
        CHECK(p.witness_has_unit);
    }
    const std::string csv = csv_rows(r);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.rfind("17,33,1,561,M1_N1_K1,1,1,4,,ef11,15,15\n", 0) == 0);

    const FieldReport plain = compute_field(-2, -6, false);
    CHECK_FALSE(plain.primes.front().oracle_s.has_value());
    CHECK(csv_rows(plain) == "-2,-6,2,3,M3_N2_K2,4,1,1,6,e4f1_alpha6_s3,3,\n");
    CHECK(csv_header() == "m,n,d,k,pattern,e,f,g,alpha,route,s,oracle_s\n");
    CHECK_THROWS_AS(compute_field(4, 6, false), Error);
}

TEST_CASE("sweep pairs are one per field") {
    const auto pairs = sweep_pairs(10);
    std::set<std::array<std::int64_t, 3>> triples;
    for (const auto& [m, n] : pairs) {
        CHECK(m < n);
        CHECK(triples.insert(make_field(m, n).sorted_triple()).second);
    }
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair<std::int64_t, std::int64_t>{-6, -2}) != pairs.end());
    CHECK_FALSE(sweep_pairs(2).empty());
}

TEST_CASE("sweep 10 with verification") {
    const SweepResult res = run_sweep(10, true, 2);
    const auto& sum = res.summary;
    CHECK(sum.mismatches.empty());
    CHECK(sum.fields == res.reports.size());
    std::size_t rows = 0, shapes = 0, e4 = 0, e4_primes = 0;
    for (const auto& [route, c] : sum.main2_rows) rows += c;
    for (const auto& [shape, c] : sum.shapes) shapes += c;
    for (const auto& [key, c] : sum.e4f1_inventory) e4 += c;
    for (const auto& r : res.reports)
        if (r.e == 4) e4_primes += r.primes.size();
    CHECK(rows == sum.fields);
    CHECK(shapes == sum.fields);
    CHECK(e4 == e4_primes);

    bool saw_minus2_minus6 = false, saw_s2 = false;
    for (const auto& r : res.reports) {
        if (r.field.sorted_triple() == make_field(-2, -6).sorted_triple()) {
            saw_minus2_minus6 = true;
            CHECK(r.lower_bound == 3);
        }
        if (r.e == 2 && r.f == 2) saw_s2 = saw_s2 || r.lower_bound == 2;
    }
    CHECK(saw_minus2_minus6);
    CHECK(saw_s2);
}

TEST_CASE("sweep output does not depend on the worker count") {
    const std::string one = sweep_csv(run_sweep(12, true, 1));
    CHECK(one == sweep_csv(run_sweep(12, true, 3)));
    CHECK(one == sweep_csv(run_sweep(12, true, 8)));
    CHECK(one.rfind(csv_header(), 0) == 0);
}

TEST_CASE("residue tables") {
    const ResidueTables t = residue_tables(-2, -6);
    CHECK(t.mod8.ok());
    CHECK(t.mod8.lines.size() == 12);
    CHECK(t.mod8.residues.size() == 4);
    CHECK(t.mod13.ok());
    CHECK(t.mod13.lines.size() == 15);
    CHECK(t.mod13.lines[1].printed == "t^4+4t^3+6t^2+4t+1");
    CHECK(t.mod13.lines[14].base == "(t^3)^4");
    CHECK(t.mod13.lines[14].printed == "t^12");
    const Element zero{0, 0, 0, 0};
    CHECK(std::find(t.mod8.residues.begin(), t.mod8.residues.end(), zero) != t.mod8.residues.end());
    CHECK(std::find(t.mod13.residues.begin(), t.mod13.residues.end(), zero) != t.mod13.residues.end());
    CHECK(residue_tables(2, -34).mod13.ok());
    CHECK_THROWS_AS(residue_tables(17, 33), std::invalid_argument);
}

TEST_CASE("witness check") {
    const WitnessCheck w = witness_check();
    CHECK(w.exact.is_zero());
    CHECK(w.vanishes_mod_p13);
    CHECK(w.lower_bound == 3);
    CHECK(w.ok());
}

TEST_CASE("polynomial formatting") {
    CHECK(poly_string({1, 4, 6, 4, 1}) == "t^4+4t^3+6t^2+4t+1");
    CHECK(poly_string({0}) == "0");
    CHECK(poly_string({-1, 0, 2}) == "2t^2-1");
    CHECK(poly_string({0, 1}) == "t");
}
