#include "s4/factor2.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "s4/error.hpp"

namespace s4 {

namespace {

// Elements of the 16-element ring indexed 0..15 by element_at order.
std::uint16_t span_mask(const std::vector<unsigned>& gens) {
    std::uint16_t mask = 1;  // {0}
    for (unsigned g : gens) {
        std::uint16_t shifted = 0;
        for (unsigned v = 0; v < 16; ++v)
            if (mask & (1u << v)) shifted |= static_cast<std::uint16_t>(1u << (v ^ g));
        mask |= shifted;
    }
    return mask;
}

bool quotient_is_field(const StructuredRing& ring, const RingIdeal& ideal) {
    if (ideal.is_whole()) return false;
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        const Element x = ring.element_at(i);
        if (ideal.contains(x)) continue;
        for (std::uint64_t j = 0; j < ring.size(); ++j) {
            const Element y = ring.element_at(j);
            if (!ideal.contains(y) && ideal.contains(ring.mul(x, y))) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<RingIdeal> maximal_ideals(const std::shared_ptr<const StructuredRing>& ring_mod2) {
    if (ring_mod2->exponent() != 1) {
        throw std::invalid_argument("maximal_ideals expects O_K/(2)");
    }
    std::set<std::uint16_t> subspaces;
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = a; b < 16; ++b)
            for (unsigned c = b; c < 16; ++c)
                for (unsigned d = c; d < 16; ++d) subspaces.insert(span_mask({a, b, c, d}));

    std::vector<RingIdeal> out;
    for (std::uint16_t mask : subspaces) {
        std::vector<Element> members;
        for (unsigned v = 0; v < 16; ++v)
            if (mask & (1u << v)) members.push_back(ring_mod2->element_at(v));
        RingIdeal ideal = ideal_from_gens(ring_mod2, members);
        if (ideal.size() != static_cast<std::uint64_t>(std::popcount(mask))) continue;  // not an ideal
        if (quotient_is_field(*ring_mod2, ideal)) out.push_back(std::move(ideal));
    }
    if (out.empty()) throw Error(ErrorKind::NoMaximalIdeal, "no maximal ideal found in O_K/(2)");
    return out;
}

RingIdeal lift_ideal(const std::shared_ptr<const StructuredRing>& ring, const RingIdeal& ideal_mod2) {
    std::vector<Element> gens;
    for (const auto& r : ideal_mod2.canonical_basis()) gens.push_back(r.v);
    for (int j = 0; j < 4; ++j) gens.push_back(ring->scale(ring->basis(j), 2));
    return ideal_from_gens(ring, gens);
}

Element first_uniformizer(const PowerChain& chain) {
    const StructuredRing& ring = chain.power(0).ring();
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
        const Element x = ring.element_at(i);
        if (chain.contains(x, 1) && !chain.contains(x, 2)) return x;
    }
    throw Error(ErrorKind::InconsistentFactorization, "p equals p^2");
}

Factorization factor_two(const BiquadraticField& field) {
    return factor_two(integral_basis(field));
}

Factorization factor_two(const IntegralBasis& basis) {
    auto ring2 = std::make_shared<const StructuredRing>(structure_mod(basis, 1));
    const auto maxes = maximal_ideals(ring2);

    RingIdeal radical = whole_ring(ring2);
    for (const auto& p : maxes) radical = ideal_product(radical, p);
    unsigned alpha = 1;
    RingIdeal power = radical;
    while (!power.is_zero()) {
        power = ideal_product(power, radical);
        ++alpha;
        if (alpha > 4) throw Error(ErrorKind::InconsistentFactorization, "radical of (2) is not nilpotent of index <= 4");
    }

    Factorization fact;
    fact.e = alpha;
    fact.g = static_cast<unsigned>(maxes.size());
    fact.f = static_cast<unsigned>(std::countr_zero(maxes.front().index()));

    auto ring = std::make_shared<const StructuredRing>(structure_mod(basis, kChainExponent));
    for (const auto& p : maxes) {
        const auto f = static_cast<unsigned>(std::countr_zero(p.index()));
        if (f != fact.f) {
            throw Error(ErrorKind::InconsistentFactorization, "primes above 2 with different inertial degrees");
        }
        PrimeAboveTwo prime;
        prime.gens_mod2 = p.generators();
        prime.e = fact.e;
        prime.f = f;
        prime.ring = ring;
        prime.chain = std::make_shared<const PowerChain>(lift_ideal(ring, p), kChainExponent * fact.e);
        prime.uniformizer = first_uniformizer(*prime.chain);
        fact.primes.push_back(std::move(prime));
    }
    if (fact.e * fact.f * fact.g != 4) {
        throw Error(ErrorKind::InconsistentFactorization,
                    "e f g = " + std::to_string(fact.e) + "*" + std::to_string(fact.f) + "*" + std::to_string(fact.g));
    }
    return fact;
}

}  // namespace s4
