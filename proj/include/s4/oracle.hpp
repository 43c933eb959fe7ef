#pragma once

// Brute-force fourth level of O_K / p^N by exhaustive enumeration.

#include <cstdint>
#include <memory>
#include <vector>

#include "s4/factor2.hpp"
#include "s4/finring.hpp"
#include "s4/numberfield.hpp"

namespace s4 {

// Upper bound on any finite fourth level of a number field.
inline constexpr unsigned kLevelCap = 16;

struct PowerResidueSet {
    unsigned modulus_exponent = 0;  // N
    std::shared_ptr<const QuotientRing> quotient;  // O_K / p^N
    std::vector<Element> residues;       // canonical representatives, ascending rank
    std::vector<Element> preimages;      // preimages[i]^4 == residues[i]
    std::vector<bool> unit_residue;      // residues[i] is the fourth power of some x not in p

    bool contains(const Element& x) const;
};

// Every x^4 in O_K/p^N. N must not exceed the prime's chain.
PowerResidueSet fourth_powers(const PrimeAboveTwo& prime, unsigned N);

struct LevelSearch {
    unsigned s = 0;
    std::vector<Element> summands;        // x_1..x_s with sum x_i^4 = -1 in O_K/p^N
    std::vector<std::uint64_t> ladder;    // |S_0|, |S_1|, ... up to S_s
};

// Smallest g <= kLevelCap with -1 a sum of g fourth powers. Throws Error{CapExceeded}.
LevelSearch min_sum_to_minus_one(const PowerResidueSet& powers);

// S_0 = {0}, S_1, ..., S_levels as membership bitmaps indexed by quotient rank.
std::vector<std::vector<bool>> sumset_ladder(const PowerResidueSet& powers, unsigned levels);

// s_4 of O_K / p^N.
unsigned oracle_level(const PrimeAboveTwo& prime, unsigned N);

struct ModulusComparison {
    unsigned at_3e1 = 0;
    unsigned at_4e1 = 0;
    bool agree() const { return at_3e1 == at_4e1; }
};

ModulusComparison hensel_modulus_equivalence(const PrimeAboveTwo& prime);

// x = y (mod p^e)  =>  x^4 = y^4 (mod p^(3e+1)), over all of O_K/p^(3e+1). Needs e > 1, f = 1.
bool fourth_powers_constant_on_cosets(const PrimeAboveTwo& prime);

struct ExactSum {
    OrderElement sum{};
    bool is_zero() const { return sum == OrderElement{0, 0, 0, 0}; }
};

// Exact sum of fourth powers of elements of O_K given over the power basis.
ExactSum fourth_power_sum(const IntegralBasis& basis, const std::vector<PowerCoords>& terms);

// Power-basis coordinates of sqrt(r) for r one of the field's m, n, k.
PowerCoords sqrt_of(const BiquadraticField& field, std::int64_t r);

// The four terms of the level-3 certificate for Q(sqrt -2, sqrt -6).
std::vector<PowerCoords> witness_terms(const BiquadraticField& field);

// ((s2+s6)/2)^4 + ((s2-s6)/2)^4 + (s2+1)^4 + (s2-1)^4 == 0 exactly, s2 = sqrt -2, s6 = sqrt -6.
bool witness_identity();

}  // namespace s4
