#include "s4/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "s4/error.hpp"

namespace s4 {

bool PowerResidueSet::contains(const Element& x) const {
    const Element r = quotient->reduce(x);
    return std::find(residues.begin(), residues.end(), r) != residues.end();
}

PowerResidueSet fourth_powers(const PrimeAboveTwo& prime, unsigned N) {
    const StructuredRing& ring = *prime.ring;
    const PowerChain& chain = *prime.chain;
    PowerResidueSet out;
    out.modulus_exponent = N;
    out.quotient = std::make_shared<const QuotientRing>(quotient(prime.ring, chain.power(N)));
    const QuotientRing& q = *out.quotient;

    constexpr std::uint64_t kUnseen = std::numeric_limits<std::uint64_t>::max();
    // rank of a residue -> rank of its first preimage; unit flag kept separately
    std::vector<std::uint64_t> first(q.size(), kUnseen);
    std::vector<bool> unit(q.size(), false);
    for (std::uint64_t i = 0; i < q.size(); ++i) {
        const Element x = q.unrank(i);
        const Element x2 = ring.mul(x, x);
        const auto r = q.rank(q.reduce(ring.mul(x2, x2)));
        if (first[r] == kUnseen) first[r] = i;
        if (!chain.contains(x, 1)) unit[r] = true;
    }
    for (std::uint64_t r = 0; r < q.size(); ++r) {
        if (first[r] == kUnseen) continue;
        out.residues.push_back(q.unrank(r));
        out.preimages.push_back(q.unrank(first[r]));
        out.unit_residue.push_back(unit[r]);
    }
    return out;
}

namespace {

struct Bfs {
    std::vector<std::uint8_t> level;       // 0xff = unreached
    std::vector<std::uint16_t> via;        // residue index used to reach the element
    std::vector<std::uint64_t> ladder;     // |S_g|
};

constexpr std::uint8_t kUnreached = 0xff;

// Grows S_0 = {0}, S_1, ... until `stop` returns true or `levels` is reached.
template <class Stop>
Bfs grow(const PowerResidueSet& powers, unsigned levels, Stop stop) {
    const QuotientRing& q = *powers.quotient;
    const StructuredRing& ring = q.parent();
    Bfs bfs;
    bfs.level.assign(q.size(), kUnreached);
    bfs.via.assign(q.size(), 0);
    std::vector<std::uint64_t> frontier{q.rank(q.reduce(ring.zero()))};
    bfs.level[frontier.front()] = 0;
    bfs.ladder.push_back(1);
    std::uint64_t total = 1;
    for (unsigned g = 1; g <= levels && !stop(bfs, g - 1); ++g) {
        std::vector<std::uint64_t> next;
        for (const auto x_rank : frontier) {
            const Element x = q.unrank(x_rank);
            for (std::size_t ri = 0; ri < powers.residues.size(); ++ri) {
                const auto y = q.rank(q.add(x, powers.residues[ri]));
                if (bfs.level[y] != kUnreached) continue;
                bfs.level[y] = static_cast<std::uint8_t>(g);
                bfs.via[y] = static_cast<std::uint16_t>(ri);
                next.push_back(y);
            }
        }
        total += next.size();
        bfs.ladder.push_back(total);
        frontier = std::move(next);
    }
    return bfs;
}

}  // namespace

LevelSearch min_sum_to_minus_one(const PowerResidueSet& powers) {
    const QuotientRing& q = *powers.quotient;
    const StructuredRing& ring = q.parent();
    if (powers.residues.size() > std::numeric_limits<std::uint16_t>::max()) {
        throw std::length_error("too many fourth-power residues");
    }
    const auto target = q.rank(q.reduce(ring.neg(ring.one())));
    Bfs bfs = grow(powers, kLevelCap, [target](const Bfs& b, unsigned) { return b.level[target] != kUnreached; });
    if (bfs.level[target] == kUnreached) {
        throw Error(ErrorKind::CapExceeded, "-1 is not a sum of " + std::to_string(kLevelCap) + " fourth powers");
    }
    LevelSearch out;
    out.s = bfs.level[target];
    out.ladder.assign(bfs.ladder.begin(), bfs.ladder.begin() + out.s + 1);
    Element y = q.unrank(target);
    for (unsigned g = out.s; g > 0; --g) {
        const auto ri = bfs.via[q.rank(y)];
        out.summands.push_back(powers.preimages[ri]);
        y = q.reduce(ring.sub(y, powers.residues[ri]));
    }
    return out;
}

std::vector<std::vector<bool>> sumset_ladder(const PowerResidueSet& powers, unsigned levels) {
    Bfs bfs = grow(powers, levels, [](const Bfs&, unsigned) { return false; });
    std::vector<std::vector<bool>> out(levels + 1, std::vector<bool>(bfs.level.size(), false));
    for (std::size_t i = 0; i < bfs.level.size(); ++i) {
        if (bfs.level[i] == kUnreached) continue;
        for (unsigned g = bfs.level[i]; g <= levels; ++g) out[g][i] = true;
    }
    return out;
}

unsigned oracle_level(const PrimeAboveTwo& prime, unsigned N) {
    return min_sum_to_minus_one(fourth_powers(prime, N)).s;
}

ModulusComparison hensel_modulus_equivalence(const PrimeAboveTwo& prime) {
    return {oracle_level(prime, 3 * prime.e + 1), oracle_level(prime, 4 * prime.e + 1)};
}

bool fourth_powers_constant_on_cosets(const PrimeAboveTwo& prime) {
    if (prime.e <= 1 || prime.f != 1) {
        throw std::invalid_argument("fourth_powers_constant_on_cosets needs e > 1 and f = 1");
    }
    const StructuredRing& ring = *prime.ring;
    const PowerChain& chain = *prime.chain;
    const QuotientRing q = quotient(prime.ring, chain.power(3 * prime.e + 1));

    std::vector<std::uint64_t> fourth(q.size());
    std::vector<Element> shifts;  // p^e / p^(3e+1)
    for (std::uint64_t i = 0; i < q.size(); ++i) {
        const Element x = q.unrank(i);
        fourth[i] = q.rank(q.reduce(ring.pow(x, 4)));
        if (chain.contains(x, prime.e)) shifts.push_back(x);
    }
    for (std::uint64_t i = 0; i < q.size(); ++i) {
        const Element x = q.unrank(i);
        for (const auto& z : shifts) {
            if (fourth[q.rank(q.add(x, z))] != fourth[i]) return false;
        }
    }
    return true;
}

ExactSum fourth_power_sum(const IntegralBasis& basis, const std::vector<PowerCoords>& terms) {
    ExactSum out;
    for (const auto& t : terms) {
        const OrderElement p = basis.pow(basis.from_power(t), 4);
        for (int i = 0; i < 4; ++i) out.sum[i] += p[i];
    }
    return out;
}

PowerCoords sqrt_of(const BiquadraticField& field, std::int64_t r) {
    const std::int64_t slots[3] = {field.role_m(), field.role_n(), field.role_k()};
    for (int i = 0; i < 3; ++i) {
        if (slots[i] == r) {
            PowerCoords out{};
            out[static_cast<std::size_t>(i) + 1] = 1;
            return out;
        }
    }
    throw std::invalid_argument(std::to_string(r) + " is not one of m, n, k");
}

std::vector<PowerCoords> witness_terms(const BiquadraticField& field) {
    const PowerCoords s2 = sqrt_of(field, -2);
    const PowerCoords s6 = sqrt_of(field, -6);
    const Rational half(1, 2);
    PowerCoords plus{}, minus{}, s2p1 = s2, s2m1 = s2;
    for (int i = 0; i < 4; ++i) {
        plus[i] = (s2[i] + s6[i]) * half;
        minus[i] = (s2[i] - s6[i]) * half;
    }
    s2p1[0] += 1;
    s2m1[0] -= 1;
    return {plus, minus, s2p1, s2m1};
}

bool witness_identity() {
    const BiquadraticField field = make_field(-2, -6);
    return fourth_power_sum(integral_basis(field), witness_terms(field)).is_zero();
}

}  // namespace s4
