#pragma once

// Rank-4 commutative algebras over Z/2^a, their ideals (as canonical additive
// subgroups) and quotient rings.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace s4 {

using Element = std::array<std::uint32_t, 4>;

class StructuredRing {
public:
    static constexpr unsigned kMaxExponent = 8;
    using Table = std::array<std::array<std::array<std::uint32_t, 4>, 4>, 4>;

    // `table` is reduced mod 2^a_exp on construction. 1 <= a_exp <= kMaxExponent.
    StructuredRing(unsigned a_exp, const std::array<std::array<std::array<std::int64_t, 4>, 4>, 4>& table);

    unsigned exponent() const { return a_exp_; }
    std::uint32_t modulus() const { return mask_ + 1; }
    std::uint32_t mask() const { return mask_; }
    std::uint64_t size() const { return std::uint64_t{1} << (4 * a_exp_); }
    const Table& table() const { return table_; }

    Element zero() const { return {0, 0, 0, 0}; }
    Element one() const { return {1, 0, 0, 0}; }
    Element basis(int i) const;
    Element constant(std::int64_t c) const;
    Element from_ints(const std::array<std::int64_t, 4>& v) const;

    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element neg(const Element& x) const;
    Element scale(const Element& x, std::int64_t c) const;
    Element mul(const Element& x, const Element& y) const;
    Element pow(Element x, unsigned e) const;

    // Element with index i in lexicographic order of coordinate tuples.
    Element element_at(std::uint64_t i) const;

    // Commutativity, associativity and unit checks on basis elements.
    bool is_commutative() const;
    bool is_associative() const;
    bool has_unit() const;

private:
    unsigned a_exp_;
    std::uint32_t mask_;
    Table table_{};
};

// One row of a Howell normal form: pivot column `col` holding 2^`shift`.
struct HowellRow {
    Element v;
    int col;
    unsigned shift;

    bool operator==(const HowellRow&) const = default;
};

// Howell normal form over Z/2^a_exp of the additive subgroup spanned by `rows`.
std::vector<HowellRow> howell_form(std::vector<Element> rows, unsigned a_exp);

class RingIdeal {
public:
    RingIdeal(std::shared_ptr<const StructuredRing> ring, std::vector<HowellRow> basis);

    const StructuredRing& ring() const { return *ring_; }
    const std::shared_ptr<const StructuredRing>& ring_ptr() const { return ring_; }
    const std::vector<HowellRow>& canonical_basis() const { return basis_; }
    std::vector<Element> generators() const;

    std::uint64_t size() const;
    std::uint64_t index() const { return ring_->size() / size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_whole() const { return index() == 1; }
    bool contains(Element x) const;
    // Canonical coset representative of x modulo this ideal.
    Element reduce(Element x) const;

    bool operator==(const RingIdeal& other) const { return basis_ == other.basis_; }

private:
    std::shared_ptr<const StructuredRing> ring_;
    std::vector<HowellRow> basis_;
};

RingIdeal ideal_from_gens(std::shared_ptr<const StructuredRing> ring, const std::vector<Element>& gens);
RingIdeal whole_ring(std::shared_ptr<const StructuredRing> ring);
RingIdeal ideal_product(const RingIdeal& a, const RingIdeal& b);
RingIdeal ideal_power(const RingIdeal& ideal, unsigned t);
bool is_subset(const RingIdeal& a, const RingIdeal& b);

// x in p^value, and x not in p^(value+1) unless `at_least`.
struct Valuation {
    unsigned value = 0;
    bool at_least = false;

    bool operator==(const Valuation&) const = default;
    bool exactly(unsigned j) const { return !at_least && value == j; }
    bool geq(unsigned j) const { return value >= j; }
    std::string str() const;
};

// p^0, p^1, ..., p^top of a prime ideal, inside a fixed finite ring.
class PowerChain {
public:
    explicit PowerChain(const RingIdeal& prime, unsigned top);

    unsigned top() const { return static_cast<unsigned>(powers_.size()) - 1; }
    const RingIdeal& power(unsigned j) const;
    bool contains(const Element& x, unsigned j) const { return power(j).contains(x); }
    Valuation valuation(const Element& x) const;

private:
    std::vector<RingIdeal> powers_;
};

class QuotientRing {
public:
    QuotientRing(std::shared_ptr<const StructuredRing> parent, RingIdeal modulus);

    const StructuredRing& parent() const { return *parent_; }
    const RingIdeal& modulus() const { return modulus_; }
    std::uint64_t size() const { return size_; }

    Element reduce(const Element& x) const { return modulus_.reduce(x); }
    Element add(const Element& x, const Element& y) const { return reduce(parent_->add(x, y)); }
    Element mul(const Element& x, const Element& y) const { return reduce(parent_->mul(x, y)); }

    // Dense index of a canonical representative, and its inverse.
    std::uint64_t rank(const Element& rep) const;
    Element unrank(std::uint64_t i) const;

private:
    std::shared_ptr<const StructuredRing> parent_;
    RingIdeal modulus_;
    std::array<std::uint32_t, 4> radix_{};
    std::array<std::uint64_t, 4> stride_{};
    std::uint64_t size_ = 1;
};

QuotientRing quotient(std::shared_ptr<const StructuredRing> ring, const RingIdeal& ideal);

std::string to_string(const Element& x);

}  // namespace s4
