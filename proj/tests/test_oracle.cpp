#include <doctest.h>

#include <algorithm>
#include <set>

#include "s4/error.hpp"
#include "s4/factor2.hpp"
#include "s4/oracle.hpp"

using namespace s4;

namespace {

// Plain integer brute force over Z/32: minimal number of fourth powers summing to 31.
unsigned integer_level_mod32(std::set<unsigned>& powers) {
    for (unsigned x = 0; x < 32; ++x) powers.insert((x * x * x * x) % 32);
    std::set<unsigned> reach{0};
    for (unsigned g = 1; g <= 16; ++g) {
        std::set<unsigned> next;
        for (unsigned a : reach)
            for (unsigned p : powers) next.insert((a + p) % 32);
        reach = next;
        if (reach.count(31)) return g;
    }
    return 0;
}

}  // namespace

TEST_CASE("Z/32 from a split prime") {
    std::set<unsigned> int_powers;
    CHECK(integer_level_mod32(int_powers) == 15);
    CHECK(int_powers == std::set<unsigned>{0, 1, 16, 17});

    const auto fac = factor_two(make_field(17, 33));
    const auto& prime = fac.primes.front();
    const auto powers = fourth_powers(prime, 5);
    REQUIRE(powers.quotient->size() == 32);
    std::set<Element> expected;
    for (unsigned c : int_powers) expected.insert(powers.quotient->reduce(prime.ring->constant(c)));
    CHECK(std::set<Element>(powers.residues.begin(), powers.residues.end()) == expected);
    const auto search = min_sum_to_minus_one(powers);
    CHECK(search.s == 15);
    CHECK(search.summands.size() == 15);
}

TEST_CASE("fourth-power classes mod p^8 for Q(sqrt -2, sqrt -6)") {
    const auto fac = factor_two(make_field(-2, -6));
    const auto& prime = fac.primes.front();
    const auto& ring = *prime.ring;
    const auto powers = fourth_powers(prime, 8);
    const auto& q = *powers.quotient;
    const Element t = prime.uniformizer;
    const Element t4 = ring.pow(t, 4);
    const std::set<Element> expected{q.reduce(ring.zero()), q.reduce(ring.one()), q.reduce(t4),
                                     q.reduce(ring.add(ring.add(t4, ring.scale(ring.mul(t, t), 2)), ring.one()))};
    CHECK(expected.size() == 4);
    CHECK(std::set<Element>(powers.residues.begin(), powers.residues.end()) == expected);
    for (std::size_t i = 0; i < powers.residues.size(); ++i) {
        CHECK(q.reduce(ring.pow(powers.preimages[i], 4)) == powers.residues[i]);
        CHECK(powers.contains(powers.residues[i]));
    }
}

TEST_CASE("fourth powers are constant on cosets of p^e mod p^(3e+1)") {
    CHECK(fourth_powers_constant_on_cosets(factor_two(make_field(-2, -6)).primes.front()));
    CHECK(fourth_powers_constant_on_cosets(factor_two(make_field(17, 2)).primes.front()));
    CHECK(fourth_powers_constant_on_cosets(factor_two(make_field(2, -34)).primes.front()));
    CHECK_THROWS_AS(fourth_powers_constant_on_cosets(factor_two(make_field(17, 33)).primes.front()), std::invalid_argument);
    CHECK_THROWS_AS(fourth_powers_constant_on_cosets(factor_two(make_field(5, 3)).primes.front()), std::invalid_argument);
}

TEST_CASE("the level does not change between 3e+1 and 4e+1") {
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{-2, -6}, {2, -34}, {17, 2}, {5, 3}, {17, 33}, {3, 7}}) {
        for (const auto& p : factor_two(make_field(m, n)).primes) {
            CHECK(hensel_modulus_equivalence(p).agree());
        }
    }
}

TEST_CASE("sumset ladder") {
    const auto fac = factor_two(make_field(-2, -6));
    const auto powers = fourth_powers(fac.primes.front(), 13);
    const auto ladder = sumset_ladder(powers, 6);
    REQUIRE(ladder.size() == 7);
    std::vector<std::size_t> sizes;
    for (unsigned g = 0; g < ladder.size(); ++g) {
        sizes.push_back(static_cast<std::size_t>(std::count(ladder[g].begin(), ladder[g].end(), true)));
        if (g == 0) continue;
        for (std::size_t i = 0; i < ladder[g].size(); ++i) {
            if (ladder[g - 1][i]) REQUIRE(ladder[g][i]);
        }
    }
    CHECK(sizes.front() == 1);
    CHECK(std::is_sorted(sizes.begin(), sizes.end()));
    // once a step adds nothing the ladder stays put
    for (std::size_t g = 1; g + 1 < sizes.size(); ++g) {
        if (sizes[g] == sizes[g - 1]) CHECK(sizes[g + 1] == sizes[g]);
    }

    const auto search = min_sum_to_minus_one(powers);
    CHECK(search.s == 3);
    for (unsigned g = 0; g <= search.s; ++g) CHECK(search.ladder[g] == sizes[g]);
    const auto& q = *powers.quotient;
    CHECK(ladder[search.s][q.rank(q.reduce(fac.primes.front().ring->constant(-1)))]);
    CHECK_FALSE(ladder[search.s - 1][q.rank(q.reduce(fac.primes.front().ring->constant(-1)))]);
}

TEST_CASE("reconstructed representation sums to -1 and has a unit summand") {
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{-2, -6}, {2, -34}, {17, 2}, {5, 3}, {17, 33}}) {
        for (const auto& p : factor_two(make_field(m, n)).primes) {
            const unsigned N = 4 * p.e + 1;
            const auto powers = fourth_powers(p, N);
            const auto search = min_sum_to_minus_one(powers);
            const auto& ring = *p.ring;
            Element sum = ring.zero();
            bool unit = false;
            for (const auto& x : search.summands) {
                sum = ring.add(sum, ring.pow(x, 4));
                unit = unit || !p.chain->contains(x, 1);
            }
            CHECK(search.summands.size() == search.s);
            CHECK(p.chain->contains(ring.add(sum, ring.one()), N));
            CHECK(unit);
        }
    }
}

TEST_CASE("exact witness identity") {
    CHECK(witness_identity());
    const auto field = make_field(-2, -6);
    const auto basis = integral_basis(field);
    auto terms = witness_terms(field);
    REQUIRE(terms.size() == 4);
    CHECK(fourth_power_sum(basis, terms).is_zero());
    // (sqrt -2 + 1) -> (sqrt -2 - 1) duplicates a term and breaks the identity
    terms[2][0] = -terms[2][0];
    CHECK_FALSE(fourth_power_sum(basis, terms).is_zero());
    CHECK_THROWS_AS(sqrt_of(field, 5), std::invalid_argument);
}
