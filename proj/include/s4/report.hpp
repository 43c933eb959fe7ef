#pragma once

// Per-field reports, range sweeps and the residue-table reproduction used by
// the command-line tool.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "s4/factor2.hpp"
#include "s4/level.hpp"
#include "s4/numberfield.hpp"
#include "s4/oracle.hpp"

namespace s4 {

struct PrimeReport {
    std::vector<Element> gens_mod2;
    Element uniformizer{};
    LevelResult level;
    std::optional<unsigned> oracle_s;             // at N = 4e + 1
    std::optional<unsigned> oracle_s_3e1;         // at N = 3e + 1
    std::vector<Element> witness_representation;  // x_i with sum x_i^4 = -1 mod p^(4e+1)
    bool witness_has_unit = false;
};

struct FieldReport {
    BiquadraticField field;
    unsigned e = 0, f = 0, g = 0;
    LevelResult main2;
    std::vector<PrimeReport> primes;
    unsigned lower_bound = 0;  // max over primes; a lower bound for s_4(K)
    std::vector<std::string> mismatches;

    bool consistent() const { return mismatches.empty(); }
};

// Throws Error on invalid input; consistency failures land in `mismatches`.
FieldReport compute_field(std::int64_t m, std::int64_t n, bool verify);

nlohmann::ordered_json to_json(const FieldReport& report);
std::string csv_header();
std::string csv_rows(const FieldReport& report);
std::string to_text(const FieldReport& report);

struct SweepSummary {
    std::int64_t max_abs = 0;
    bool verified = false;
    std::size_t fields = 0;
    std::map<std::string, std::size_t> main2_rows;                           // main2 route -> fields
    std::map<std::pair<unsigned, std::string>, std::size_t> e4f1_inventory;  // (alpha, route) -> primes
    std::map<std::string, std::size_t> shapes;                               // "e,f,g" -> fields
    std::vector<std::string> mismatches;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

struct SweepResult {
    std::vector<FieldReport> reports;  // canonical order
    SweepSummary summary;
};

// Pairs (m, n), m < n, |m|, |n| <= max_abs, one per distinct field.
std::vector<std::pair<std::int64_t, std::int64_t>> sweep_pairs(std::int64_t max_abs);

SweepResult run_sweep(std::int64_t max_abs, bool verify, unsigned jobs);
std::string sweep_csv(const SweepResult& result);

// Fourth-power class tables modulo p^8 and p^13 for an e = 4, f = 1 prime.
struct ResidueLine {
    std::string base;      // x, as a polynomial in t
    std::string printed;   // expected x^4, as a polynomial in t
    Element computed{};
    Element expected{};
    bool match = false;
};

struct ResidueTable {
    unsigned modulus_exponent = 0;
    std::vector<ResidueLine> lines;
    std::vector<Element> residues;        // every x^4 mod p^N, from exhaustive enumeration
    std::vector<Element> printed_classes; // {0} plus the printed right-hand sides
    bool set_match = false;

    bool ok() const;
};

struct ResidueTables {
    BiquadraticField field;
    Element tau{};
    ResidueTable mod8;
    ResidueTable mod13;
};

// Throws std::invalid_argument unless the field has an e = 4, f = 1 prime.
ResidueTables residue_tables(std::int64_t m, std::int64_t n);

// Exact identity, its reduction mod p^13 and the local lower bound for Q(sqrt -2, sqrt -6).
struct WitnessCheck {
    ExactSum exact;
    bool vanishes_mod_p13 = false;
    unsigned lower_bound = 0;

    bool ok() const { return exact.is_zero() && vanishes_mod_p13 && lower_bound == 3; }
};

WitnessCheck witness_check();

std::string poly_string(const std::vector<std::int64_t>& coeffs);

}  // namespace s4
