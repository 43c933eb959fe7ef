#pragma once

// Biquadratic fields Q(sqrt m, sqrt n), their integral bases and the exact
// multiplication tables of the rings of integers.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace s4 {

class StructuredRing;

using Rational = boost::rational<std::int64_t>;

// Residues mod 4 of the role-assigned triple (m, n, k).
enum class BasisPattern {
    M3_N2_K2,
    M1_N3_K3,
    M1_N2_K2,
    M1_N1_K1,
};

std::string_view to_string(BasisPattern p);

bool is_square_free(std::int64_t x);

struct BiquadraticField {
    std::int64_t m = 0;  // as given
    std::int64_t n = 0;
    std::int64_t d = 0;  // gcd(|m|, |n|)
    std::int64_t k = 0;  // m n / d^2
    BasisPattern pattern = BasisPattern::M1_N1_K1;
    // roles[i] indexes {m, n, k}: the value playing slot i of the pattern.
    std::array<int, 3> roles{0, 1, 2};

    std::int64_t generator(int i) const { return i == 0 ? m : (i == 1 ? n : k); }
    std::int64_t role_m() const { return generator(roles[0]); }
    std::int64_t role_n() const { return generator(roles[1]); }
    std::int64_t role_k() const { return generator(roles[2]); }
    // gcd(|role_m|, |role_n|); fixes the root convention sqrt(M) sqrt(N) = D sqrt(K).
    std::int64_t role_d() const;

    // {m, n, k} sorted ascending; equal iff the fields are equal.
    std::array<std::int64_t, 3> sorted_triple() const;
};

// Throws Error{NotSquareFree | DegenerateField}.
BiquadraticField make_field(std::int64_t m, std::int64_t n);

// Element of K written over the power basis (1, sqrt M, sqrt N, sqrt K) of the
// role-assigned triple.
using PowerCoords = std::array<Rational, 4>;

// Exact multiplication in the power basis under sqrt M sqrt N = D sqrt K.
PowerCoords power_mul(const BiquadraticField& field, const PowerCoords& x, const PowerCoords& y);

// Integer coordinates over an integral basis.
using OrderElement = std::array<std::int64_t, 4>;
using ExactTable = std::array<std::array<std::array<std::int64_t, 4>, 4>, 4>;

struct IntegralBasis {
    BiquadraticField field;
    std::array<std::string, 4> description;  // "1", "a", "b", "c" in symbolic form
    std::array<PowerCoords, 4> elements;     // basis vectors over the power basis
    ExactTable structure{};                  // basis_i * basis_j = sum_h structure[i][j][h] basis_h

    // Throws Error{NonIntegralStructure} if x is not in the order.
    OrderElement from_power(const PowerCoords& x) const;
    PowerCoords to_power(const OrderElement& x) const;

    OrderElement mul(const OrderElement& x, const OrderElement& y) const;
    OrderElement pow(OrderElement x, unsigned e) const;
};

IntegralBasis integral_basis(const BiquadraticField& field);

// O_K / (2^a_exp).
StructuredRing structure_mod(const IntegralBasis& basis, unsigned a_exp);

}  // namespace s4
