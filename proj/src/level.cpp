#include "s4/level.hpp"

#include <stdexcept>
#include <utility>

#include "s4/error.hpp"

namespace s4 {

namespace {

// Ring element bound to its ring so condition expressions read like the printed formulas.
struct Expr {
    const StructuredRing* ring;
    Element v;
};

Expr operator+(Expr a, Expr b) { return {a.ring, a.ring->add(a.v, b.v)}; }
Expr operator+(Expr a, std::int64_t c) { return {a.ring, a.ring->add(a.v, a.ring->constant(c))}; }
Expr operator*(Expr a, Expr b) { return {a.ring, a.ring->mul(a.v, b.v)}; }
Expr operator*(std::int64_t c, Expr a) { return {a.ring, a.ring->scale(a.v, c)}; }
Expr pw(Expr a, unsigned e) { return {a.ring, a.ring->pow(a.v, e)}; }

template <class F>
ConditionExpr expr(std::string name, F f) {
    return {std::move(name), [f](const StructuredRing& ring, const Element& tau) { return f(Expr{&ring, tau}).v; }};
}

enum class TestKind { AtLeast, Exactly };

struct Test {
    ConditionExpr expr;
    TestKind kind;
    unsigned j;
};

struct Subcase {
    unsigned s;
    std::vector<Test> any_of;
};

struct Row {
    std::vector<Subcase> explicit_cases;
    std::optional<unsigned> otherwise;
};

Test divisible13(ConditionExpr e) { return {std::move(e), TestKind::AtLeast, 13}; }

Row row_for(unsigned alpha) {
    Row row;
    switch (alpha) {
        case 5:
            row.explicit_cases = {
                {3, {divisible13(expr("t12+t8+2t6+4t3+4",
                                      [](Expr t) { return pw(t, 12) + pw(t, 8) + 2 * pw(t, 6) + 4 * pw(t, 3) + 4; }))}},
                {4, {divisible13(expr("t8+2t6+4t3+4", [](Expr t) { return pw(t, 8) + 2 * pw(t, 6) + 4 * pw(t, 3) + 4; }))}},
                {5, {divisible13(expr("t8+4t3+4t2+4", [](Expr t) { return pw(t, 8) + 4 * pw(t, 3) + 4 * pw(t, 2) + 4; }))}},
                {6, {divisible13(expr("t12+t8+4t3+4t2+4",
                                      [](Expr t) { return pw(t, 12) + pw(t, 8) + 4 * pw(t, 3) + 4 * pw(t, 2) + 4; }))}},
            };
            break;
        case 6: {
            const auto a1 = [](Expr t) { return 4 * pw(t, 3) + 4 * pw(t, 2) + 4 * t + (pw(t, 4) + 2 * pw(t, 2) + 2); };
            const auto a2 = [](Expr t) { return 4 * t + (pw(t, 4) + 1) * (pw(t, 4) + 2 * pw(t, 2) + 2); };
            const auto a3 = [](Expr t) { return 4 * t + (pw(t, 4) + 2 * pw(t, 2) + 2); };
            const auto a4 = [](Expr t) {
                return 4 * pw(t, 3) + 4 * pw(t, 2) + 4 * t + (pw(t, 4) + 1) * (pw(t, 4) + 2 * pw(t, 2) + 2);
            };
            const std::vector<ConditionExpr> as{expr("A1", a1), expr("A2", a2), expr("A3", a3), expr("A4", a4)};
            const std::vector<ConditionExpr> as_t8{
                expr("A1+t8", [a1](Expr t) { return a1(t) + pw(t, 8); }),
                expr("A2+t8", [a2](Expr t) { return a2(t) + pw(t, 8); }),
                expr("A3+t8", [a3](Expr t) { return a3(t) + pw(t, 8); }),
                expr("A4+t8", [a4](Expr t) { return a4(t) + pw(t, 8); }),
            };
            Subcase s1{1, {}}, s2{2, {}};
            for (const auto& a : as) s1.any_of.push_back(divisible13(a));
            for (const auto& a : as) s2.any_of.push_back({a, TestKind::Exactly, 12});
            for (const auto& a : as_t8) s2.any_of.push_back({a, TestKind::AtLeast, 12});
            row.explicit_cases = {s1, s2};
            row.otherwise = 3;
            break;
        }
        case 7:
            row.explicit_cases = {
                {3, {divisible13(expr("t12+4t3+2(t4+2)",
                                      [](Expr t) { return pw(t, 12) + 4 * pw(t, 3) + 2 * (pw(t, 4) + 2); }))}},
            };
            row.otherwise = 4;
            break;
        case 8: {
            const auto x = [](Expr t) { return pw(t, 8) + pw(t, 4) + 2; };
            row.explicit_cases = {
                {2,
                 {divisible13(expr("X", x)),
                  divisible13(expr("4t2+X", [x](Expr t) { return 4 * pw(t, 2) + x(t); })),
                  divisible13(expr("t12+4t3+X", [x](Expr t) { return pw(t, 12) + 4 * pw(t, 3) + x(t); })),
                  divisible13(expr("t12+4t3+4t2+X",
                                   [x](Expr t) { return pw(t, 12) + 4 * pw(t, 3) + 4 * pw(t, 2) + x(t); }))}},
                {3,
                 {divisible13(expr("t12+X", [x](Expr t) { return pw(t, 12) + x(t); })),
                  divisible13(expr("t12+4t2+X", [x](Expr t) { return pw(t, 12) + 4 * pw(t, 2) + x(t); })),
                  divisible13(expr("4t3+X", [x](Expr t) { return 4 * pw(t, 3) + x(t); })),
                  divisible13(expr("4t3+4t2+X", [x](Expr t) { return 4 * pw(t, 3) + 4 * pw(t, 2) + x(t); }))}},
                {4, {{expr("X", x), TestKind::Exactly, 9}}},
            };
            break;
        }
        case 9:
            row.otherwise = 4;
            break;
        case 10:
            row.explicit_cases = {
                {2,
                 {divisible13(expr("t12+4t3+4t2+t4+2",
                                   [](Expr t) { return pw(t, 12) + 4 * pw(t, 3) + 4 * pw(t, 2) + pw(t, 4) + 2; })),
                  divisible13(expr("t12+4t2+t4+2", [](Expr t) { return pw(t, 12) + 4 * pw(t, 2) + pw(t, 4) + 2; }))}},
            };
            row.otherwise = 3;
            break;
        case 11:
            row.explicit_cases = {
                {2, {divisible13(expr("4t3+t4+2", [](Expr t) { return 4 * pw(t, 3) + pw(t, 4) + 2; }))}},
            };
            row.otherwise = 3;
            break;
        case 12:
            row.otherwise = 3;
            break;
        default:  // >= 13
            row.otherwise = 2;
            break;
    }
    return row;
}

bool passes(const Test& t, const Valuation& v) {
    return t.kind == TestKind::AtLeast ? v.geq(t.j) : v.exactly(t.j);
}

LevelResult fixed(unsigned s, std::string route) {
    LevelResult r;
    r.s = s;
    r.route = std::move(route);
    return r;
}

std::int64_t pos_mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

unsigned v2(std::int64_t x) {
    unsigned v = 0;
    while (x != 0 && x % 2 == 0) {
        x /= 2;
        ++v;
    }
    return v;
}

}  // namespace

std::vector<ConditionExpr> condition_exprs(unsigned alpha) {
    std::vector<ConditionExpr> out;
    for (const auto& sc : row_for(alpha).explicit_cases)
        for (const auto& t : sc.any_of) out.push_back(t.expr);
    return out;
}

LevelResult level_e4_f1(const PrimeAboveTwo& prime, std::optional<Element> tau_override) {
    if (prime.e != 4 || prime.f != 1) {
        throw Error(ErrorKind::UnsupportedEF, "level_e4_f1 needs e = 4, f = 1");
    }
    const StructuredRing& ring = *prime.ring;
    const PowerChain& chain = *prime.chain;
    const Element tau = tau_override.value_or(prime.uniformizer);
    if (!chain.contains(tau, 1) || chain.contains(tau, 2)) {
        throw std::invalid_argument("tau must lie in p \\ p^2");
    }

    const Valuation alpha = chain.valuation(ring.add(ring.pow(tau, 4), ring.constant(2)));
    if (alpha.value < 5) {
        throw Error(ErrorKind::AlphaTooSmall, "v_p(tau^4 + 2) = " + alpha.str());
    }
    const unsigned row_id = alpha.value >= 13 ? 13 : alpha.value;
    const std::string prefix = row_id >= 13 ? "e4f1_alpha13plus" : "e4f1_alpha" + std::to_string(row_id);
    const Row row = row_for(row_id);

    LevelResult result;
    result.alpha = alpha;
    const Subcase* fired = nullptr;
    std::string fired_by;
    unsigned fired_count = 0;
    for (const auto& sc : row.explicit_cases) {
        bool holds = false;
        std::string first;
        for (const auto& t : sc.any_of) {
            const Valuation v = chain.valuation(t.expr.evaluate(ring, tau));
            const bool ok = passes(t, v);
            std::string name = t.expr.name;
            if (t.kind == TestKind::Exactly) name += "@" + std::to_string(t.j);
            result.witnesses.push_back({name, v, ok});
            if (ok && !holds) first = t.expr.name;
            holds = holds || ok;
        }
        if (holds) {
            ++fired_count;
            if (!fired) {
                fired = &sc;
                fired_by = sc.any_of.size() > 1 ? "_" + first : "";
            }
        }
    }
    if (fired_count > 1) {
        throw Error(ErrorKind::AmbiguousSubcase, prefix + ": " + std::to_string(fired_count) + " subcases hold");
    }
    if (fired) {
        result.s = fired->s;
        result.route = prefix + "_s" + std::to_string(fired->s) + fired_by;
    } else if (row.otherwise) {
        result.s = *row.otherwise;
        result.route = prefix + "_s" + std::to_string(*row.otherwise);
    } else {
        throw Error(ErrorKind::NoSubcase, prefix + ": no subcase holds");
    }
    return result;
}

LevelResult level_from_ef(const PrimeAboveTwo& prime) {
    const unsigned e = prime.e, f = prime.f;
    if (e == 0 || f == 0 || e * f > 4) {
        throw Error(ErrorKind::UnsupportedEF, "(e, f) = (" + std::to_string(e) + ", " + std::to_string(f) + ")");
    }
    if (e == 1 && f == 1) return fixed(15, "ef11");
    if (f % 2 == 0) return fixed(2, "ef_f_even");
    if (e == 3 && f == 1) return fixed(9, "ef31");
    if (e == 1 && f == 3) return fixed(5, "ef13");
    if (e == 2 && f == 1) {
        const StructuredRing& ring = *prime.ring;
        const Element& pi = prime.uniformizer;
        const Valuation v = prime.chain->valuation(ring.sub(ring.mul(pi, pi), ring.constant(2)));
        LevelResult r = v.geq(4) ? fixed(6, "ef21_pi2_eq_2") : fixed(4, "ef21_otherwise");
        r.witnesses.push_back({"pi^2-2", v, v.geq(4)});
        return r;
    }
    return level_e4_f1(prime);
}

LevelResult level_main2(const BiquadraticField& field) {
    const std::int64_t m = field.role_m(), n = field.role_n(), k = field.role_k();
    switch (field.pattern) {
        case BasisPattern::M3_N2_K2: {
            const std::int64_t sum = n + k;
            const unsigned v = sum == 0 ? 64 : v2(sum);
            const std::int64_t r = pos_mod(n * k / 4, 16);
            const std::string tag = "_v" + std::to_string(v >= 5 ? 5 : v) + "_r" + std::to_string(r);
            if (v == 3) return fixed(3, "main2_m3n2k2_v3");
            if (v >= 5 && r == 15) return fixed(1, "main2_m3n2k2" + tag);
            if (v == 4 && r == 7) return fixed(1, "main2_m3n2k2" + tag);
            if (v >= 5 && r == 7) return fixed(2, "main2_m3n2k2" + tag);
            if (v == 4 && r == 15) return fixed(2, "main2_m3n2k2" + tag);
            throw Error(ErrorKind::NoPatternMatch, "m = 3, n = k = 2 (mod 4) row without a matching subrow" + tag);
        }
        case BasisPattern::M1_N3_K3:
            return pos_mod(m, 8) == 1 ? fixed(4, "main2_m1n3k3_m1") : fixed(2, "main2_m1n3k3_m5");
        case BasisPattern::M1_N2_K2:
            return pos_mod(m, 8) == 1 ? fixed(6, "main2_m1n2k2_m1") : fixed(2, "main2_m1n2k2_m5");
        case BasisPattern::M1_N1_K1:
            if (pos_mod(m, 8) == 1 && pos_mod(n, 8) == 1 && pos_mod(k, 8) == 1) return fixed(15, "main2_m1n1k1_all1");
            return fixed(2, "main2_m1n1k1_otherwise");
    }
    throw Error(ErrorKind::NoPatternMatch, "unknown pattern");
}

}  // namespace s4
