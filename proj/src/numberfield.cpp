#include "s4/numberfield.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "s4/error.hpp"
#include "s4/finring.hpp"

namespace s4 {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotSquareFree: return "NotSquareFree";
        case ErrorKind::DegenerateField: return "DegenerateField";
        case ErrorKind::NoPatternMatch: return "NoPatternMatch";
        case ErrorKind::NonIntegralStructure: return "NonIntegralStructure";
        case ErrorKind::ChainTooShort: return "ChainTooShort";
        case ErrorKind::NoMaximalIdeal: return "NoMaximalIdeal";
        case ErrorKind::InconsistentFactorization: return "InconsistentFactorization";
        case ErrorKind::UnsupportedEF: return "UnsupportedEF";
        case ErrorKind::AlphaTooSmall: return "AlphaTooSmall";
        case ErrorKind::AmbiguousSubcase: return "AmbiguousSubcase";
        case ErrorKind::NoSubcase: return "NoSubcase";
        case ErrorKind::CapExceeded: return "CapExceeded";
    }
    return "Unknown";
}

std::string_view to_string(BasisPattern p) {
    switch (p) {
        case BasisPattern::M3_N2_K2: return "M3_N2_K2";
        case BasisPattern::M1_N3_K3: return "M1_N3_K3";
        case BasisPattern::M1_N2_K2: return "M1_N2_K2";
        case BasisPattern::M1_N1_K1: return "M1_N1_K1";
    }
    return "?";
}

bool is_square_free(std::int64_t x) {
    if (x == 0) return false;
    std::int64_t a = x < 0 ? -x : x;
    for (std::int64_t p = 2; p * p <= a; ++p) {
        if (a % (p * p) == 0) return false;
    }
    return true;
}

namespace {

int mod4(std::int64_t x) { return static_cast<int>(((x % 4) + 4) % 4); }

std::optional<BasisPattern> pattern_of(std::int64_t m, std::int64_t n, std::int64_t k) {
    const int a = mod4(m), b = mod4(n), c = mod4(k);
    if (a == 3 && b == 2 && c == 2) return BasisPattern::M3_N2_K2;
    if (a == 1 && b == 3 && c == 3) return BasisPattern::M1_N3_K3;
    if (a == 1 && b == 2 && c == 2) return BasisPattern::M1_N2_K2;
    if (a == 1 && b == 1 && c == 1) return BasisPattern::M1_N1_K1;
    return std::nullopt;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

std::int64_t BiquadraticField::role_d() const {
    return std::gcd(role_m(), role_n());
}

std::array<std::int64_t, 3> BiquadraticField::sorted_triple() const {
    std::array<std::int64_t, 3> t{m, n, k};
    std::sort(t.begin(), t.end());
    return t;
}

BiquadraticField make_field(std::int64_t m, std::int64_t n) {
    if (m == 0 || n == 0 || m == 1 || n == 1 || m == n) {
        throw Error(ErrorKind::DegenerateField,
                    "(" + std::to_string(m) + ", " + std::to_string(n) + ") does not generate a quartic field");
    }
    for (std::int64_t x : {m, n}) {
        if (!is_square_free(x)) {
            throw Error(ErrorKind::NotSquareFree, std::to_string(x) + " is not square-free");
        }
    }
    BiquadraticField field;
    field.m = m;
    field.n = n;
    field.d = std::gcd(m, n);
    field.k = (m / field.d) * (n / field.d);
    if (!is_square_free(field.k)) {
        throw Error(ErrorKind::NotSquareFree, "derived k = " + std::to_string(field.k) + " is not square-free");
    }
    if (field.k == 1) {
        throw Error(ErrorKind::DegenerateField, "derived k = 1");
    }
    for (const auto& perm : kPermutations) {
        if (auto p = pattern_of(field.generator(perm[0]), field.generator(perm[1]), field.generator(perm[2]))) {
            field.pattern = *p;
            field.roles = perm;
            return field;
        }
    }
    throw Error(ErrorKind::NoPatternMatch, "no basis pattern for (" + std::to_string(m) + ", " + std::to_string(n) + ")");
}

PowerCoords power_mul(const BiquadraticField& field, const PowerCoords& x, const PowerCoords& y) {
    const std::int64_t M = field.role_m(), N = field.role_n(), K = field.role_k(), D = field.role_d();
    // e_i e_j = coef * e_target over (1, sqrt M, sqrt N, sqrt K)
    struct Term {
        std::int64_t coef;
        int target;
    };
    const Term table[4][4] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {M, 0}, {D, 3}, {M / D, 2}},
        {{1, 2}, {D, 3}, {N, 0}, {N / D, 1}},
        {{1, 3}, {M / D, 2}, {N / D, 1}, {K, 0}},
    };
    PowerCoords out{};
    for (int i = 0; i < 4; ++i) {
        if (x[i].numerator() == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (y[j].numerator() == 0) continue;
            const Term t = table[i][j];
            out[t.target] += x[i] * y[j] * t.coef;
        }
    }
    return out;
}

OrderElement IntegralBasis::from_power(const PowerCoords& x) const {
    // Solve sum_i c_i elements[i] = x; columns of the system are the basis vectors.
    std::array<std::array<Rational, 5>, 4> a{};
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) a[row][col] = elements[col][row];
        a[row][4] = x[row];
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (a[piv][col].numerator() == 0) ++piv;
        std::swap(a[piv], a[col]);
        for (int row = 0; row < 4; ++row) {
            if (row == col || a[row][col].numerator() == 0) continue;
            const Rational f = a[row][col] / a[col][col];
            for (int c = col; c < 5; ++c) a[row][c] -= f * a[col][c];
        }
    }
    OrderElement out{};
    for (int i = 0; i < 4; ++i) {
        const Rational c = a[i][4] / a[i][i];
        if (c.denominator() != 1) {
            throw Error(ErrorKind::NonIntegralStructure, "coordinate " + std::to_string(c.numerator()) + "/" +
                                                             std::to_string(c.denominator()) + " is not integral");
        }
        out[i] = c.numerator();
    }
    return out;
}

PowerCoords IntegralBasis::to_power(const OrderElement& x) const {
    PowerCoords out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) out[j] += elements[i][j] * x[i];
    }
    return out;
}

OrderElement IntegralBasis::mul(const OrderElement& x, const OrderElement& y) const {
    OrderElement out{};
    for (int i = 0; i < 4; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (y[j] == 0) continue;
            for (int h = 0; h < 4; ++h) out[h] += x[i] * y[j] * structure[i][j][h];
        }
    }
    return out;
}

OrderElement IntegralBasis::pow(OrderElement x, unsigned e) const {
    OrderElement result{1, 0, 0, 0};
    while (e > 0) {
        if (e & 1u) result = mul(result, x);
        x = mul(x, x);
        e >>= 1u;
    }
    return result;
}

IntegralBasis integral_basis(const BiquadraticField& field) {
    IntegralBasis basis;
    basis.field = field;
    const Rational half(1, 2);
    const PowerCoords one{1, 0, 0, 0};
    const PowerCoords root_m{0, 1, 0, 0};
    const PowerCoords root_n{0, 0, 1, 0};
    const PowerCoords half_n_plus_k{0, 0, half, half};
    const PowerCoords half_1_plus_m{half, half, 0, 0};

    switch (field.pattern) {
        case BasisPattern::M3_N2_K2:
            basis.elements = {one, root_m, root_n, half_n_plus_k};
            basis.description = {"1", "sqrt(m)", "sqrt(n)", "(sqrt(n)+sqrt(k))/2"};
            break;
        case BasisPattern::M1_N3_K3:
        case BasisPattern::M1_N2_K2:
            basis.elements = {one, half_1_plus_m, root_n, half_n_plus_k};
            basis.description = {"1", "(1+sqrt(m))/2", "sqrt(n)", "(sqrt(n)+sqrt(k))/2"};
            break;
        case BasisPattern::M1_N1_K1: {
            const PowerCoords half_1_plus_n{half, 0, half, 0};
            const PowerCoords half_1_plus_k{half, 0, 0, half};
            basis.elements = {one, half_1_plus_m, half_1_plus_n, power_mul(field, half_1_plus_m, half_1_plus_k)};
            basis.description = {"1", "(1+sqrt(m))/2", "(1+sqrt(n))/2", "((1+sqrt(m))/2)((1+sqrt(k))/2)"};
            break;
        }
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            basis.structure[i][j] = basis.from_power(power_mul(field, basis.elements[i], basis.elements[j]));
        }
    }
    return basis;
}

StructuredRing structure_mod(const IntegralBasis& basis, unsigned a_exp) {
    return StructuredRing(a_exp, basis.structure);
}

}  // namespace s4
