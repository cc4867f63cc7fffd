/**
 * Finite multisets and signed integer vectors over the generators of one
 * dimension of a graded set.
 *
 * A Multiset is an element of the free commutative monoid on the generators
 * of a fixed dimension; a SignedVector is an element of the free abelian
 * group. Both keep their entries sorted by name, never store zero counts, and
 * detect count overflow instead of wrapping.
 */

#ifndef PARITYKIT_MULTISET_HPP
#define PARITYKIT_MULTISET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace paritykit {

using Count = std::int64_t;

/** Name of a generator together with its dimension. */
struct GeneratorId {
    std::string name;
    std::size_t dim = 0;

    auto operator<=>(const GeneratorId&) const = default;
    bool operator==(const GeneratorId&) const = default;
};

std::ostream& operator<<(std::ostream& os, const GeneratorId& id);

/** Operands live over different dimensions. */
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Finite multiset of generators of a single dimension.
 *
 * The dimension is optional: a default-constructed multiset is the zero
 * element and combines with multisets of any dimension. Equality and
 * ordering look only at the entries.
 */
class Multiset {
public:
    using Entries = std::map<std::string, Count>;

    Multiset() = default;
    explicit Multiset(std::size_t dim) : dim_(dim) {}
    Multiset(std::size_t dim, std::initializer_list<std::pair<std::string, Count>> entries);

    /** Multiset in which every listed name occurs once; duplicates accumulate. */
    static Multiset of(std::size_t dim, const std::vector<std::string>& names);

    std::optional<std::size_t> dim() const { return dim_; }
    void set_dim(std::size_t dim);

    Count count(const std::string& name) const;
    bool contains(const std::string& name) const { return entries_.count(name) != 0; }
    bool empty() const { return entries_.empty(); }
    /** Number of distinct members. */
    std::size_t support_size() const { return entries_.size(); }
    /** Sum of all counts. */
    Count total() const;
    /** True iff every count is one. */
    bool is_subset() const;

    /** Adds `n` copies of `name`; `n` must be positive. */
    void add(const std::string& name, Count n = 1);

    const Entries& entries() const { return entries_; }
    Entries::const_iterator begin() const { return entries_.begin(); }
    Entries::const_iterator end() const { return entries_.end(); }

    std::vector<std::string> names() const;

    bool operator==(const Multiset& other) const { return entries_ == other.entries_; }
    std::strong_ordering operator<=>(const Multiset& other) const;

private:
    std::optional<std::size_t> dim_;
    Entries entries_;
};

std::ostream& operator<<(std::ostream& os, const Multiset& m);

/** Pointwise sum. */
Multiset disjoint_union(const Multiset& s, const Multiset& t);
/** Pointwise truncated subtraction max(s - t, 0). */
Multiset difference(const Multiset& s, const Multiset& t);
/** Pointwise minimum. */
Multiset meet(const Multiset& s, const Multiset& t);
/** Pointwise maximum. */
Multiset join(const Multiset& s, const Multiset& t);

struct MeetJoin {
    Multiset meet;
    Multiset join;
};
MeetJoin meet_join(const Multiset& s, const Multiset& t);

/** Empty meet. */
bool disjoint(const Multiset& s, const Multiset& t);
/** Componentwise s <= t. */
bool included(const Multiset& s, const Multiset& t);
/** Sum of distinct basis elements, i.e. every count is one. */
bool is_radical(const Multiset& s);

/** Element of the free abelian group on one dimension's generators. */
class SignedVector {
public:
    using Entries = std::map<std::string, Count>;

    SignedVector() = default;
    explicit SignedVector(std::size_t dim) : dim_(dim) {}
    SignedVector(std::size_t dim, std::initializer_list<std::pair<std::string, Count>> entries);

    /** pos - neg. */
    static SignedVector difference(const Multiset& pos, const Multiset& neg);
    static SignedVector from(const Multiset& m);

    std::optional<std::size_t> dim() const { return dim_; }
    void set_dim(std::size_t dim);

    Count coefficient(const std::string& name) const;
    bool is_zero() const { return entries_.empty(); }
    void add(const std::string& name, Count n);

    const Entries& entries() const { return entries_; }
    Entries::const_iterator begin() const { return entries_.begin(); }
    Entries::const_iterator end() const { return entries_.end(); }

    SignedVector& operator+=(const SignedVector& other);
    SignedVector& operator-=(const SignedVector& other);
    SignedVector operator-() const;
    friend SignedVector operator+(SignedVector a, const SignedVector& b) { return a += b; }
    friend SignedVector operator-(SignedVector a, const SignedVector& b) { return a -= b; }

    bool operator==(const SignedVector& other) const { return entries_ == other.entries_; }

private:
    std::optional<std::size_t> dim_;
    Entries entries_;
};

std::ostream& operator<<(std::ostream& os, const SignedVector& v);

/** Negative and positive parts of a signed vector. */
struct Parts {
    Multiset neg;
    Multiset pos;
};

/** (v_-, v_+) with v = v_+ - v_- and v_- ∧ v_+ = 0. */
Parts parts(const SignedVector& v);

/** Multiplies every coefficient of `v` by `k`, with overflow detection. */
SignedVector scaled(const SignedVector& v, Count k);

/** Overflow-checked count arithmetic. */
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

}  // namespace paritykit

#endif  // PARITYKIT_MULTISET_HPP
