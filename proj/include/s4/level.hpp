#pragma once

// Fourth level s_4 of the completion at a prime above 2, from (e, f) and the
// local data of the prime; plus the closed-form table for biquadratic fields.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "s4/factor2.hpp"
#include "s4/finring.hpp"
#include "s4/numberfield.hpp"

namespace s4 {

// A polynomial expression in the uniformizer, evaluated with ring operations.
struct ConditionExpr {
    std::string name;
    std::function<Element(const StructuredRing&, const Element&)> evaluate;
};

struct ConditionWitness {
    std::string name;
    Valuation valuation;
    bool holds = false;
};

struct LevelResult {
    unsigned s = 0;
    std::string route;                // stable short identifier of the case that fired
    std::optional<Valuation> alpha;   // v_p(tau^4 + 2) when e = 4, f = 1
    std::vector<ConditionWitness> witnesses;
};

// Dispatch on (e, f). Throws Error{UnsupportedEF} when e f > 4.
LevelResult level_from_ef(const PrimeAboveTwo& prime);

// e = 4, f = 1. `tau` overrides the stored uniformizer; it must lie in p \ p^2.
LevelResult level_e4_f1(const PrimeAboveTwo& prime, std::optional<Element> tau = std::nullopt);

// Closed-form table on the role-assigned (m, n, k).
LevelResult level_main2(const BiquadraticField& field);

// The named expressions tested for each alpha row (A1..A4 for alpha = 6, ...).
std::vector<ConditionExpr> condition_exprs(unsigned alpha);

}  // namespace s4
