#include "s4/report.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "s4/error.hpp"

namespace s4 {

namespace {

std::string pair_label(std::int64_t m, std::int64_t n) {
    return "(" + std::to_string(m) + ", " + std::to_string(n) + ")";
}

}  // namespace

FieldReport compute_field(std::int64_t m, std::int64_t n, bool verify) {
    FieldReport report;
    report.field = make_field(m, n);
    const Factorization fac = factor_two(report.field);
    report.e = fac.e;
    report.f = fac.f;
    report.g = fac.g;
    report.main2 = level_main2(report.field);
    const std::string label = pair_label(m, n);

    for (const auto& prime : fac.primes) {
        PrimeReport pr;
        pr.gens_mod2 = prime.gens_mod2;
        pr.uniformizer = prime.uniformizer;
        pr.level = level_from_ef(prime);
        if (verify) {
            const LevelSearch top = min_sum_to_minus_one(fourth_powers(prime, 4 * prime.e + 1));
            pr.oracle_s = top.s;
            pr.oracle_s_3e1 = oracle_level(prime, 3 * prime.e + 1);
            pr.witness_representation = top.summands;
            pr.witness_has_unit = std::any_of(top.summands.begin(), top.summands.end(),
                                              [&](const Element& x) { return !prime.chain->contains(x, 1); });
            if (pr.oracle_s != pr.level.s) {
                report.mismatches.push_back(label + ": oracle " + std::to_string(*pr.oracle_s) + " vs theorem " +
                                            std::to_string(pr.level.s) + " (" + pr.level.route + ")");
            }
            if (pr.oracle_s_3e1 != pr.oracle_s) {
                report.mismatches.push_back(label + ": oracle at 3e+1 gives " + std::to_string(*pr.oracle_s_3e1) +
                                            ", at 4e+1 gives " + std::to_string(*pr.oracle_s));
            }
            if (!pr.witness_has_unit) {
                report.mismatches.push_back(label + ": representation of -1 has no unit summand");
            }
        }
        if (pr.level.s != report.main2.s) {
            report.mismatches.push_back(label + ": theorem " + std::to_string(pr.level.s) + " (" + pr.level.route +
                                        ") vs table " + std::to_string(report.main2.s) + " (" + report.main2.route +
                                        ")");
        }
        report.lower_bound = std::max(report.lower_bound, pr.level.s);
        report.primes.push_back(std::move(pr));
    }
    return report;
}

nlohmann::ordered_json to_json(const FieldReport& report) {
    nlohmann::ordered_json j;
    const auto& fld = report.field;
    j["m"] = fld.m;
    j["n"] = fld.n;
    j["d"] = fld.d;
    j["k"] = fld.k;
    j["pattern"] = to_string(fld.pattern);
    j["e"] = report.e;
    j["f"] = report.f;
    j["g"] = report.g;
    j["primes"] = nlohmann::ordered_json::array();
    for (const auto& p : report.primes) {
        nlohmann::ordered_json pj;
        if (!p.level.alpha) {
            pj["alpha"] = nullptr;
        } else if (p.level.alpha->at_least) {
            pj["alpha"] = p.level.alpha->str();
        } else {
            pj["alpha"] = p.level.alpha->value;
        }
        pj["route"] = p.level.route;
        pj["s"] = p.level.s;
        pj["oracle_s"] = p.oracle_s ? nlohmann::ordered_json(*p.oracle_s) : nlohmann::ordered_json(nullptr);
        j["primes"].push_back(std::move(pj));
    }
    j["lower_bound"] = report.lower_bound;
    return j;
}

std::string csv_header() { return "m,n,d,k,pattern,e,f,g,alpha,route,s,oracle_s\n"; }

std::string csv_rows(const FieldReport& report) {
    std::ostringstream out;
    const auto& fld = report.field;
    for (const auto& p : report.primes) {
        out << fld.m << ',' << fld.n << ',' << fld.d << ',' << fld.k << ',' << to_string(fld.pattern) << ','
            << report.e << ',' << report.f << ',' << report.g << ',' << (p.level.alpha ? p.level.alpha->str() : "")
            << ',' << p.level.route << ',' << p.level.s << ',';
        if (p.oracle_s) out << *p.oracle_s;
        out << '\n';
    }
    return out.str();
}

std::string to_text(const FieldReport& report) {
    std::ostringstream out;
    const auto& fld = report.field;
    out << "field      Q(sqrt " << fld.m << ", sqrt " << fld.n << "), d = " << fld.d << ", k = " << fld.k << '\n';
    out << "roles      m = " << fld.role_m() << ", n = " << fld.role_n() << ", k = " << fld.role_k() << " ("
        << to_string(fld.pattern) << ")\n";
    out << "(2)        e = " << report.e << ", f = " << report.f << ", g = " << report.g << '\n';
    for (std::size_t i = 0; i < report.primes.size(); ++i) {
        const auto& p = report.primes[i];
        out << "prime " << i + 1 << "    generators mod 2:";
        for (const auto& gen : p.gens_mod2) out << ' ' << to_string(gen);
        out << "; uniformizer " << to_string(p.uniformizer) << '\n';
        out << "           s_4 = " << p.level.s << " via " << p.level.route;
        if (p.level.alpha) out << ", alpha = " << p.level.alpha->str();
        out << '\n';
        for (const auto& w : p.level.witnesses) {
            out << "           v(" << w.name << ") = " << w.valuation.str() << (w.holds ? "  holds" : "") << '\n';
        }
        if (p.oracle_s) {
            out << "           oracle: " << *p.oracle_s << " mod p^" << 4 * report.e + 1 << ", "
                << p.oracle_s_3e1.value_or(0) << " mod p^" << 3 * report.e + 1 << '\n';
            out << "           -1 =";
            for (std::size_t t = 0; t < p.witness_representation.size(); ++t) {
                out << (t ? " +" : "") << ' ' << to_string(p.witness_representation[t]) << "^4";
            }
            out << " (mod p^" << 4 * report.e + 1 << ")\n";
        }
    }
    out << "table      s_4 = " << report.main2.s << " via " << report.main2.route << '\n';
    out << "s_4(K) >= " << report.lower_bound << '\n';
    for (const auto& msg : report.mismatches) out << "MISMATCH   " << msg << '\n';
    return out.str();
}

std::vector<std::pair<std::int64_t, std::int64_t>> sweep_pairs(std::int64_t max_abs) {
    std::vector<std::int64_t> values;
    for (std::int64_t v = -max_abs; v <= max_abs; ++v) {
        if (v != 0 && v != 1 && is_square_free(v)) values.push_back(v);
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::set<std::array<std::int64_t, 3>> seen;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const BiquadraticField fld = make_field(values[i], values[j]);
            if (seen.insert(fld.sorted_triple()).second) out.emplace_back(values[i], values[j]);
        }
    }
    return out;
}

SweepResult run_sweep(std::int64_t max_abs, bool verify, unsigned jobs) {
    const auto pairs = sweep_pairs(max_abs);
    SweepResult result;
    result.reports.resize(pairs.size());
    std::vector<std::string> failures(pairs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) {
            try {
                result.reports[i] = compute_field(pairs[i].first, pairs[i].second, verify);
            } catch (const std::exception& ex) {
                failures[i] = pair_label(pairs[i].first, pairs[i].second) + ": " + ex.what();
            }
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SweepSummary& sum = result.summary;
    sum.max_abs = max_abs;
    sum.verified = verify;
    std::vector<FieldReport> kept;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!failures[i].empty()) {
            sum.mismatches.push_back(failures[i]);
            continue;
        }
        const FieldReport& r = result.reports[i];
        ++sum.fields;
        ++sum.main2_rows[r.main2.route];
        ++sum.shapes[std::to_string(r.e) + "," + std::to_string(r.f) + "," + std::to_string(r.g)];
        for (const auto& p : r.primes) {
            if (p.level.alpha) ++sum.e4f1_inventory[{p.level.alpha->value, p.level.route}];
        }
        sum.mismatches.insert(sum.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
        kept.push_back(std::move(result.reports[i]));
    }
    result.reports = std::move(kept);
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = csv_header();
    for (const auto& r : result.reports) out += csv_rows(r);
    return out;
}

nlohmann::ordered_json SweepSummary::to_json() const {
    nlohmann::ordered_json j;
    j["max_abs"] = max_abs;
    j["verified"] = verified;
    j["fields"] = fields;
    j["shapes"] = shapes;
    j["main2_rows"] = main2_rows;
    j["e4f1_inventory"] = nlohmann::ordered_json::array();
    for (const auto& [key, count] : e4f1_inventory) {
        j["e4f1_inventory"].push_back({{"alpha", key.first}, {"route", key.second}, {"primes", count}});
    }
    j["mismatches"] = mismatches;
    return j;
}

std::string SweepSummary::to_text() const {
    std::ostringstream out;
    out << "fields with |m|, |n| <= " << max_abs << ": " << fields << (verified ? " (oracle verified)" : "") << '\n';
    out << "(e,f,g) shapes\n";
    for (const auto& [shape, count] : shapes) out << "  " << shape << "  " << count << '\n';
    out << "table rows\n";
    for (const auto& [route, count] : main2_rows) out << "  " << route << "  " << count << '\n';
    out << "e = 4, f = 1 primes by alpha\n";
    for (const auto& [key, count] : e4f1_inventory) {
        out << "  alpha " << key.first << "  " << key.second << "  " << count << '\n';
    }
    out << "mismatches: " << mismatches.size() << '\n';
    for (const auto& msg : mismatches) out << "  " << msg << '\n';
    return out.str();
}

std::string poly_string(const std::vector<std::int64_t>& coeffs) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const std::int64_t c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        const std::int64_t a = c < 0 ? -c : c;
        if (i == 0) {
            out += std::to_string(a);
            continue;
        }
        if (a != 1) out += std::to_string(a);
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

namespace {

using Poly = std::vector<std::int64_t>;

struct TableLine {
    Poly base;
    Poly printed;
};

// x and x^4 mod p^8, with t = tau; t^4 + 2 lies in p^5.
const std::vector<TableLine>& mod8_lines() {
    static const std::vector<TableLine> lines = {
        {{1}, {1}},
        {{1, 1}, {1, 0, 2, 0, 1}},
        {{1, 0, 1}, {1}},
        {{1, 0, 0, 1}, {1}},
        {{1, 1, 1}, {1, 0, 2, 0, 1}},
        {{1, 1, 0, 1}, {1, 0, 2, 0, 1}},
        {{1, 0, 1, 1}, {1}},
        {{1, 1, 1, 1}, {1, 0, 2, 0, 1}},
        {{0, 1}, {0, 0, 0, 0, 1}},
        {{0, 1, 1}, {0, 0, 0, 0, 1}},
        {{0, 1, 0, 1}, {0, 0, 0, 0, 1}},
        {{0, 1, 1, 1}, {0, 0, 0, 0, 1}},
    };
    return lines;
}

Poly mono(std::size_t deg) {
    Poly p(deg + 1, 0);
    p[deg] = 1;
    return p;
}

Poly poly_sum(std::initializer_list<std::pair<std::int64_t, std::size_t>> terms) {
    Poly p;
    for (const auto& [c, deg] : terms) {
        if (p.size() <= deg) p.resize(deg + 1, 0);
        p[deg] += c;
    }
    return p;
}

// x and x^4 mod p^13.
const std::vector<TableLine>& mod13_lines() {
    static const std::vector<TableLine> lines = {
        {{1}, {1}},
        {{1, 1}, poly_sum({{1, 4}, {4, 3}, {6, 2}, {4, 1}, {1, 0}})},
        {{1, 0, 1}, poly_sum({{1, 8}, {6, 4}, {4, 2}, {1, 0}})},
        {{1, 0, 0, 1}, poly_sum({{1, 12}, {2, 6}, {4, 3}, {1, 0}})},
        {{1, 1, 1}, poly_sum({{1, 8}, {2, 6}, {3, 4}, {2, 2}, {4, 1}, {1, 0}})},
        {{1, 1, 0, 1}, poly_sum({{1, 12}, {2, 6}, {1, 4}, {6, 2}, {4, 1}, {1, 0}})},
        {{1, 0, 1, 1}, poly_sum({{1, 8}, {2, 6}, {2, 4}, {4, 3}, {4, 2}, {1, 0}})},
        {{1, 1, 1, 1}, poly_sum({{1, 12}, {1, 8}, {3, 4}, {4, 3}, {2, 2}, {4, 1}, {1, 0}})},
        {{0, 1}, mono(4)},
        {{0, 1, 1}, poly_sum({{1, 8}, {2, 6}, {1, 4}})},
        {{0, 1, 0, 1}, mono(4)},
        {{0, 1, 1, 1}, poly_sum({{1, 8}, {2, 6}, {1, 4}})},
        {{0, 0, 1}, mono(8)},
        {{0, 0, 1, 1}, poly_sum({{1, 12}, {1, 8}})},
        {{0, 0, 0, 1}, mono(12)},
    };
    return lines;
}

Element eval_poly(const StructuredRing& ring, const Poly& p, const Element& tau) {
    Element acc = ring.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = ring.add(ring.mul(acc, tau), ring.constant(p[i]));
    return acc;
}

ResidueTable build_table(const PrimeAboveTwo& prime, unsigned N, const std::vector<TableLine>& lines) {
    const StructuredRing& ring = *prime.ring;
    const Element& tau = prime.uniformizer;
    const PowerResidueSet powers = fourth_powers(prime, N);
    const QuotientRing& q = *powers.quotient;

    ResidueTable table;
    table.modulus_exponent = N;
    table.residues = powers.residues;
    std::set<Element> printed{q.reduce(ring.zero())};
    for (const auto& line : lines) {
        ResidueLine out;
        out.base = "(" + poly_string(line.base) + ")^4";
        out.printed = poly_string(line.printed);
        out.computed = q.reduce(ring.pow(eval_poly(ring, line.base, tau), 4));
        out.expected = q.reduce(eval_poly(ring, line.printed, tau));
        out.match = out.computed == out.expected;
        printed.insert(out.expected);
        table.lines.push_back(std::move(out));
    }
    table.printed_classes.assign(printed.begin(), printed.end());
    const std::set<Element> actual(powers.residues.begin(), powers.residues.end());
    table.set_match = actual == printed;
    return table;
}

}  // namespace

bool ResidueTable::ok() const {
    return set_match && std::all_of(lines.begin(), lines.end(), [](const ResidueLine& l) { return l.match; });
}

WitnessCheck witness_check() {
    WitnessCheck out;
    const BiquadraticField field = make_field(-2, -6);
    const IntegralBasis basis = integral_basis(field);
    out.exact = fourth_power_sum(basis, witness_terms(field));
    const PrimeAboveTwo prime = factor_two(basis).primes.front();
    const StructuredRing& ring = *prime.ring;
    Element sum = ring.zero();
    for (const auto& t : witness_terms(field)) sum = ring.add(sum, ring.pow(ring.from_ints(basis.from_power(t)), 4));
    out.vanishes_mod_p13 = prime.chain->contains(sum, 13);
    out.lower_bound = compute_field(-2, -6, true).lower_bound;
    return out;
}

ResidueTables residue_tables(std::int64_t m, std::int64_t n) {
    ResidueTables out;
    out.field = make_field(m, n);
    const Factorization fac = factor_two(out.field);
    if (fac.e != 4 || fac.f != 1) {
        throw std::invalid_argument("residue tables need a totally ramified prime above 2 (e = 4, f = 1)");
    }
    const PrimeAboveTwo& prime = fac.primes.front();
    out.tau = prime.uniformizer;
    out.mod8 = build_table(prime, 8, mod8_lines());
    out.mod13 = build_table(prime, 13, mod13_lines());
    return out;
}

}  // namespace s4
