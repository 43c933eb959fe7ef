#pragma once

// Factorization of (2) in the ring of integers of a biquadratic field.

#include <memory>
#include <vector>

#include "s4/finring.hpp"
#include "s4/numberfield.hpp"

namespace s4 {

// Working modulus 2^kChainExponent for lifted prime chains. p^(4e+1) must
// contain (2)^kChainExponent = (p_1...p_g)^(5e), which needs 5 > 4.
inline constexpr unsigned kChainExponent = 5;

struct PrimeAboveTwo {
    std::vector<Element> gens_mod2;  // canonical generators of the prime in O_K/(2)
    unsigned e = 0;
    unsigned f = 0;
    // O_K/(2^kChainExponent) and the chain p^0 ... p^(kChainExponent e) inside it.
    std::shared_ptr<const StructuredRing> ring;
    std::shared_ptr<const PowerChain> chain;
    Element uniformizer{};
};

struct Factorization {
    std::vector<PrimeAboveTwo> primes;
    unsigned e = 0;
    unsigned f = 0;
    unsigned g = 0;
};

// Maximal ideals of a 16-element ring, found by scanning every F_2-subspace.
std::vector<RingIdeal> maximal_ideals(const std::shared_ptr<const StructuredRing>& ring_mod2);

// Lift an ideal of O_K/(2) to its preimage in `ring` (= O_K/(2^a)).
RingIdeal lift_ideal(const std::shared_ptr<const StructuredRing>& ring, const RingIdeal& ideal_mod2);

// First element of p \ p^2 in lexicographic coordinate order.
Element first_uniformizer(const PowerChain& chain);

Factorization factor_two(const BiquadraticField& field);
Factorization factor_two(const IntegralBasis& basis);

}  // namespace s4
