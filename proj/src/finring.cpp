#include "s4/finring.hpp"

#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "s4/error.hpp"

namespace s4 {

StructuredRing::StructuredRing(unsigned a_exp,
                               const std::array<std::array<std::array<std::int64_t, 4>, 4>, 4>& table)
    : a_exp_(a_exp), mask_((std::uint32_t{1} << a_exp) - 1) {
    if (a_exp == 0 || a_exp > kMaxExponent) {
        throw std::invalid_argument("StructuredRing: exponent must lie in [1, 8]");
    }
    const std::int64_t mod = std::int64_t{1} << a_exp;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int h = 0; h < 4; ++h)
                table_[i][j][h] = static_cast<std::uint32_t>(((table[i][j][h] % mod) + mod) % mod);
}

Element StructuredRing::basis(int i) const {
    Element e{};
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

Element StructuredRing::constant(std::int64_t c) const {
    return from_ints({c, 0, 0, 0});
}

Element StructuredRing::from_ints(const std::array<std::int64_t, 4>& v) const {
    const std::int64_t mod = std::int64_t{1} << a_exp_;
    Element out{};
    for (int i = 0; i < 4; ++i) out[i] = static_cast<std::uint32_t>(((v[i] % mod) + mod) % mod);
    return out;
}

Element StructuredRing::add(const Element& x, const Element& y) const {
    return {(x[0] + y[0]) & mask_, (x[1] + y[1]) & mask_, (x[2] + y[2]) & mask_, (x[3] + y[3]) & mask_};
}

Element StructuredRing::sub(const Element& x, const Element& y) const {
    return {(x[0] - y[0]) & mask_, (x[1] - y[1]) & mask_, (x[2] - y[2]) & mask_, (x[3] - y[3]) & mask_};
}

Element StructuredRing::neg(const Element& x) const {
    return sub(zero(), x);
}

Element StructuredRing::scale(const Element& x, std::int64_t c) const {
    const auto cc = static_cast<std::uint32_t>(c) & mask_;
    return {(x[0] * cc) & mask_, (x[1] * cc) & mask_, (x[2] * cc) & mask_, (x[3] * cc) & mask_};
}

Element StructuredRing::mul(const Element& x, const Element& y) const {
    // Entries are < 2^8, so every partial sum fits comfortably in 32 bits.
    std::uint32_t acc0 = 0, acc1 = 0, acc2 = 0, acc3 = 0;
    for (int i = 0; i < 4; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            const std::uint32_t c = x[i] * y[j];
            if (c == 0) continue;
            const auto& t = table_[i][j];
            acc0 += c * t[0];
            acc1 += c * t[1];
            acc2 += c * t[2];
            acc3 += c * t[3];
        }
    }
    return {acc0 & mask_, acc1 & mask_, acc2 & mask_, acc3 & mask_};
}

Element StructuredRing::pow(Element x, unsigned e) const {
    Element result = one();
    while (e > 0) {
        if (e & 1u) result = mul(result, x);
        x = mul(x, x);
        e >>= 1u;
    }
    return result;
}

Element StructuredRing::element_at(std::uint64_t i) const {
    Element out{};
    for (int c = 3; c >= 0; --c) {
        out[c] = static_cast<std::uint32_t>(i) & mask_;
        i >>= a_exp_;
    }
    return out;
}

bool StructuredRing::is_commutative() const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (table_[i][j] != table_[j][i]) return false;
    return true;
}

bool StructuredRing::is_associative() const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int h = 0; h < 4; ++h)
                if (mul(mul(basis(i), basis(j)), basis(h)) != mul(basis(i), mul(basis(j), basis(h)))) return false;
    return true;
}

bool StructuredRing::has_unit() const {
    for (int j = 0; j < 4; ++j)
        if (mul(one(), basis(j)) != basis(j) || mul(basis(j), one()) != basis(j)) return false;
    return true;
}

namespace {

// Inverse of an odd residue modulo 2^32 (Newton iteration), truncated by the caller.
std::uint32_t odd_inverse(std::uint32_t u) {
    std::uint32_t inv = u;
    for (int i = 0; i < 5; ++i) inv *= 2u - u * inv;
    return inv;
}

Element axpy(const Element& y, std::uint32_t q, const Element& x, std::uint32_t mask) {
    // y - q x
    return {(y[0] - q * x[0]) & mask, (y[1] - q * x[1]) & mask, (y[2] - q * x[2]) & mask, (y[3] - q * x[3]) & mask};
}

bool is_zero_vec(const Element& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0; }

}  // namespace

std::vector<HowellRow> howell_form(std::vector<Element> rows, unsigned a_exp) {
    const std::uint32_t mask = (std::uint32_t{1} << a_exp) - 1;
    for (auto& r : rows)
        for (auto& x : r) x &= mask;

    std::vector<HowellRow> out;
    for (int col = 0; col < 4; ++col) {
        std::size_t best = rows.size();
        unsigned best_shift = a_exp;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const auto s = static_cast<unsigned>(std::countr_zero(rows[i][col]));
            if (s < best_shift) {
                best_shift = s;
                best = i;
            }
        }
        if (best == rows.size()) continue;

        Element piv = rows[best];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        const std::uint32_t inv = odd_inverse(piv[col] >> best_shift);
        for (auto& x : piv) x = (x * inv) & mask;

        for (auto& r : rows) {
            if (r[col] != 0) r = axpy(r, r[col] >> best_shift, piv, mask);
        }
        for (auto& o : out) {
            o.v = axpy(o.v, o.v[col] >> best_shift, piv, mask);
        }
        if (best_shift > 0) {
            // 2^(a - shift) * piv vanishes in this column but may survive further right.
            Element ann = piv;
            for (auto& x : ann) x = (x << (a_exp - best_shift)) & mask;
            if (!is_zero_vec(ann)) rows.push_back(ann);
        }
        out.push_back({piv, col, best_shift});
        std::erase_if(rows, is_zero_vec);
    }
    assert(rows.empty());
    return out;
}

RingIdeal::RingIdeal(std::shared_ptr<const StructuredRing> ring, std::vector<HowellRow> basis)
    : ring_(std::move(ring)), basis_(std::move(basis)) {}

std::vector<Element> RingIdeal::generators() const {
    std::vector<Element> out;
    out.reserve(basis_.size());
    for (const auto& r : basis_) out.push_back(r.v);
    return out;
}

std::uint64_t RingIdeal::size() const {
    std::uint64_t s = 1;
    for (const auto& r : basis_) s <<= (ring_->exponent() - r.shift);
    return s;
}

bool RingIdeal::contains(Element x) const {
    const std::uint32_t mask = ring_->mask();
    for (const auto& r : basis_) {
        const std::uint32_t low = (std::uint32_t{1} << r.shift) - 1;
        if (x[r.col] & low) return false;
        x = axpy(x, x[r.col] >> r.shift, r.v, mask);
    }
    return is_zero_vec(x);
}

Element RingIdeal::reduce(Element x) const {
    const std::uint32_t mask = ring_->mask();
    for (const auto& r : basis_) {
        const std::uint32_t q = x[r.col] >> r.shift;
        if (q != 0) x = axpy(x, q, r.v, mask);
    }
    return x;
}

RingIdeal ideal_from_gens(std::shared_ptr<const StructuredRing> ring, const std::vector<Element>& gens) {
    const unsigned a = ring->exponent();
    auto rows = howell_form(gens, a);
    while (true) {
        std::vector<Element> next;
        next.reserve(rows.size() * 4);
        for (const auto& r : rows) {
            next.push_back(r.v);
            for (int j = 1; j < 4; ++j) next.push_back(ring->mul(r.v, ring->basis(j)));
        }
        auto closed = howell_form(std::move(next), a);
        if (closed == rows) break;
        rows = std::move(closed);
    }
    return RingIdeal(std::move(ring), std::move(rows));
}

RingIdeal whole_ring(std::shared_ptr<const StructuredRing> ring) {
    const Element one = ring->one();
    return ideal_from_gens(std::move(ring), {one});
}

RingIdeal ideal_product(const RingIdeal& a, const RingIdeal& b) {
    const StructuredRing& ring = a.ring();
    std::vector<Element> gens;
    for (const auto& x : a.canonical_basis())
        for (const auto& y : b.canonical_basis()) gens.push_back(ring.mul(x.v, y.v));
    return ideal_from_gens(a.ring_ptr(), gens);
}

RingIdeal ideal_power(const RingIdeal& ideal, unsigned t) {
    RingIdeal result = whole_ring(ideal.ring_ptr());
    for (unsigned i = 0; i < t; ++i) result = ideal_product(result, ideal);
    return result;
}

bool is_subset(const RingIdeal& a, const RingIdeal& b) {
    for (const auto& r : a.canonical_basis())
        if (!b.contains(r.v)) return false;
    return true;
}

std::string Valuation::str() const {
    return (at_least ? ">=" : "") + std::to_string(value);
}

PowerChain::PowerChain(const RingIdeal& prime, unsigned top) {
    powers_.push_back(whole_ring(prime.ring_ptr()));
    for (unsigned j = 1; j <= top; ++j) powers_.push_back(ideal_product(powers_.back(), prime));
}

const RingIdeal& PowerChain::power(unsigned j) const {
    if (j > top()) {
        throw Error(ErrorKind::ChainTooShort,
                    "requested p^" + std::to_string(j) + " but the chain stops at p^" + std::to_string(top()));
    }
    return powers_[j];
}

Valuation PowerChain::valuation(const Element& x) const {
    // powers_ is a descending chain, so membership is monotone in j.
    unsigned j = 0;
    while (j < top() && powers_[j + 1].contains(x)) ++j;
    return {j, j == top()};
}

QuotientRing::QuotientRing(std::shared_ptr<const StructuredRing> parent, RingIdeal modulus)
    : parent_(std::move(parent)), modulus_(std::move(modulus)) {
    const unsigned a = parent_->exponent();
    radix_.fill(std::uint32_t{1} << a);
    for (const auto& r : modulus_.canonical_basis()) radix_[r.col] = std::uint32_t{1} << r.shift;
    std::uint64_t stride = 1;
    for (int c = 3; c >= 0; --c) {
        stride_[c] = stride;
        stride *= radix_[c];
    }
    size_ = stride;
}

std::uint64_t QuotientRing::rank(const Element& rep) const {
    std::uint64_t i = 0;
    for (int c = 0; c < 4; ++c) i += rep[c] * stride_[c];
    return i;
}

Element QuotientRing::unrank(std::uint64_t i) const {
    Element out{};
    for (int c = 3; c >= 0; --c) {
        out[c] = static_cast<std::uint32_t>(i % radix_[c]);
        i /= radix_[c];
    }
    return out;
}

QuotientRing quotient(std::shared_ptr<const StructuredRing> ring, const RingIdeal& ideal) {
    return QuotientRing(std::move(ring), ideal);
}

std::string to_string(const Element& x) {
    std::ostringstream os;
    os << '(' << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
    return os.str();
}

}  // namespace s4
