// s4: fourth level of 2-adic completions of biquadratic fields.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "s4/error.hpp"
#include "s4/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kFailure = 3;

unsigned default_jobs() {
    if (const char* env = std::getenv("S4_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_compute(std::int64_t m, std::int64_t n, bool verify, bool json) {
    const s4::FieldReport report = s4::compute_field(m, n, verify);
    if (json) {
        std::cout << s4::to_json(report).dump(2) << '\n';
    } else {
        std::cout << s4::to_text(report);
    }
    return report.consistent() ? kOk : kFailure;
}

int run_sweep(std::int64_t max_abs, bool verify, const std::string& csv, unsigned jobs, bool json) {
    const s4::SweepResult result = s4::run_sweep(max_abs, verify, jobs);
    if (!csv.empty()) {
        std::ofstream out(csv);
        if (!out) {
            std::cerr << "cannot write " << csv << '\n';
            return kFailure;
        }
        out << s4::sweep_csv(result);
    }
    if (json) {
        for (const auto& r : result.reports) std::cout << s4::to_json(r).dump() << '\n';
        std::cout << nlohmann::ordered_json{{"summary", result.summary.to_json()}}.dump() << '\n';
    } else {
        std::cout << result.summary.to_text();
    }
    return result.summary.mismatches.empty() ? kOk : kFailure;
}

void print_table(const s4::ResidueTable& table) {
    std::cout << "fourth powers mod p^" << table.modulus_exponent << '\n';
    for (const auto& line : table.lines) {
        std::cout << "  " << line.base << " = " << line.printed << "  " << (line.match ? "ok" : "FAIL") << "  "
                  << s4::to_string(line.computed) << '\n';
    }
    std::cout << "  " << table.residues.size() << " classes; printed set "
              << (table.set_match ? "matches" : "DIFFERS") << '\n';
}

int run_lemmas(std::int64_t m, std::int64_t n) {
    const s4::ResidueTables tables = s4::residue_tables(m, n);
    std::cout << "field Q(sqrt " << m << ", sqrt " << n << "), t = " << s4::to_string(tables.tau) << '\n';
    print_table(tables.mod8);
    print_table(tables.mod13);
    return tables.mod8.ok() && tables.mod13.ok() ? kOk : kFailure;
}

int run_witness() {
    const s4::WitnessCheck check = s4::witness_check();
    const auto& c = check.exact.sum;
    std::cout << "((s2+s6)/2)^4 + ((s2-s6)/2)^4 + (s2+1)^4 + (s2-1)^4 = (" << c[0] << ", " << c[1] << ", " << c[2]
              << ", " << c[3] << ") in O_K  (s2 = sqrt -2, s6 = sqrt -6)\n";
    std::cout << "same sum mod p^13: " << (check.vanishes_mod_p13 ? "0" : "NONZERO") << '\n';
    std::cout << "s_4 <= 3 from the identity (divide by (s2-1)^4)" << (check.exact.is_zero() ? "" : ": FAILED") << '\n';
    std::cout << "s_4 >= " << check.lower_bound << " from the completion at the prime above 2\n";
    if (!check.ok()) {
        std::cerr << "witness check failed\n";
        return kFailure;
    }
    std::cout << "s₄(Q(√−2,√−6)) = 3\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourth level of 2-adic completions of Q(sqrt m, sqrt n)"};
    app.require_subcommand(1);

    std::int64_t m = 0, n = 0, max_abs = 0;
    bool verify = false, json = false;
    std::string csv;
    unsigned jobs = default_jobs();

    auto* compute = app.add_subcommand("compute", "Level at each prime above 2 of one field");
    compute->add_option("m", m, "First radicand")->required();
    compute->add_option("n", n, "Second radicand")->required();
    compute->add_flag("--verify", verify, "Cross-check with the brute-force oracle");
    compute->add_flag("--json", json, "JSON output");

    auto* sweep = app.add_subcommand("sweep", "Every field with |m|, |n| <= MAX");
    sweep->add_option("max_abs", max_abs, "Bound on |m| and |n|")->required()->check(CLI::Range(2, 1000));
    sweep->add_flag("--verify", verify, "Cross-check with the brute-force oracle");
    sweep->add_option("--csv", csv, "Write one row per (field, prime)");
    sweep->add_option("--jobs", jobs, "Worker threads (default: $S4_JOBS or all cores)")->check(CLI::PositiveNumber);
    sweep->add_flag("--json", json, "One JSON record per field, then the summary");

    std::int64_t lm = -2, ln = -6;
    auto* lemmas = app.add_subcommand("lemmas", "Fourth-power class tables mod p^8 and p^13");
    lemmas->add_option("--m", lm, "First radicand");
    lemmas->add_option("--n", ln, "Second radicand");

    auto* witness = app.add_subcommand("witness", "s_4 of Q(sqrt -2, sqrt -6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (compute->parsed()) return run_compute(m, n, verify, json);
        if (sweep->parsed()) return run_sweep(max_abs, verify, csv, jobs, json);
        if (lemmas->parsed()) return run_lemmas(lm, ln);
        if (witness->parsed()) return run_witness();
    } catch (const s4::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return s4::is_input_error(e.kind()) ? kInputError : kFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
