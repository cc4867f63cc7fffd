#include "paritykit/multiset.hpp"

#include <algorithm>
#include <limits>

namespace paritykit {

namespace {

std::optional<std::size_t> common_dim(std::optional<std::size_t> a, std::optional<std::size_t> b) {
    if (a && b && *a != *b) {
        throw DimensionMismatch("operands over dimensions " + std::to_string(*a) + " and " +
                                std::to_string(*b));
    }
    return a ? a : b;
}

}  // namespace

Count checked_add(Count a, Count b) {
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("multiset count overflow");
    return out;
}

Count checked_mul(Count a, Count b) {
    Count out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("multiset count overflow");
    return out;
}

std::ostream& operator<<(std::ostream& os, const GeneratorId& id) {
    return os << id.name << '@' << id.dim;
}

// ---------------------------------------------------------------- Multiset

Multiset::Multiset(std::size_t dim, std::initializer_list<std::pair<std::string, Count>> entries)
    : dim_(dim) {
    for (const auto& [name, n] : entries) add(name, n);
}

Multiset Multiset::of(std::size_t dim, const std::vector<std::string>& names) {
    Multiset m(dim);
    for (const auto& name : names) m.add(name);
    return m;
}

void Multiset::set_dim(std::size_t dim) {
    if (dim_ && *dim_ != dim && !entries_.empty()) {
        throw DimensionMismatch("multiset over dimension " + std::to_string(*dim_) +
                                " relabelled as dimension " + std::to_string(dim));
    }
    dim_ = dim;
}

Count Multiset::count(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? 0 : it->second;
}

Count Multiset::total() const {
    Count sum = 0;
    for (const auto& [_, n] : entries_) sum = checked_add(sum, n);
    return sum;
}

bool Multiset::is_subset() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second == 1; });
}

void Multiset::add(const std::string& name, Count n) {
    if (n <= 0) throw std::invalid_argument("multiset counts must be positive");
    if (name.empty()) throw std::invalid_argument("empty generator name");
    auto [it, inserted] = entries_.try_emplace(name, n);
    if (!inserted) it->second = checked_add(it->second, n);
}

std::vector<std::string> Multiset::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [name, _] : entries_) out.push_back(name);
    return out;
}

std::strong_ordering Multiset::operator<=>(const Multiset& other) const {
    return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(), other.entries_.begin(),
                                                  other.entries_.end());
}

std::ostream& operator<<(std::ostream& os, const Multiset& m) {
    os << '{';
    bool first = true;
    for (const auto& [name, n] : m) {
        if (!first) os << ", ";
        first = false;
        os << name;
        if (n != 1) os << ':' << n;
    }
    return os << '}';
}

Multiset disjoint_union(const Multiset& s, const Multiset& t) {
    auto dim = common_dim(s.dim(), t.dim());
    Multiset out = s;
    if (dim) out.set_dim(*dim);
    for (const auto& [name, n] : t) out.add(name, n);
    return out;
}

Multiset difference(const Multiset& s, const Multiset& t) {
    auto dim = common_dim(s.dim(), t.dim());
    Multiset out = dim ? Multiset(*dim) : Multiset();
    for (const auto& [name, n] : s) {
        Count rest = n - t.count(name);
        if (rest > 0) out.add(name, rest);
    }
    return out;
}

Multiset meet(const Multiset& s, const Multiset& t) {
    auto dim = common_dim(s.dim(), t.dim());
    Multiset out = dim ? Multiset(*dim) : Multiset();
    for (const auto& [name, n] : s) {
        Count m = std::min(n, t.count(name));
        if (m > 0) out.add(name, m);
    }
    return out;
}

Multiset join(const Multiset& s, const Multiset& t) {
    auto dim = common_dim(s.dim(), t.dim());
    Multiset out = dim ? Multiset(*dim) : Multiset();
    for (const auto& [name, n] : s) out.add(name, std::max(n, t.count(name)));
    for (const auto& [name, n] : t) {
        if (!s.contains(name)) out.add(name, n);
    }
    return out;
}

MeetJoin meet_join(const Multiset& s, const Multiset& t) { return {meet(s, t), join(s, t)}; }

bool disjoint(const Multiset& s, const Multiset& t) {
    common_dim(s.dim(), t.dim());
    const auto& small = s.support_size() <= t.support_size() ? s : t;
    const auto& large = s.support_size() <= t.support_size() ? t : s;
    return std::none_of(small.begin(), small.end(), [&](const auto& e) { return large.contains(e.first); });
}

bool included(const Multiset& s, const Multiset& t) {
    common_dim(s.dim(), t.dim());
    return std::all_of(s.begin(), s.end(), [&](const auto& e) { return e.second <= t.count(e.first); });
}

bool is_radical(const Multiset& s) { return s.is_subset(); }

// ------------------------------------------------------------ SignedVector

SignedVector::SignedVector(std::size_t dim, std::initializer_list<std::pair<std::string, Count>> entries)
    : dim_(dim) {
    for (const auto& [name, n] : entries) add(name, n);
}

SignedVector SignedVector::difference(const Multiset& pos, const Multiset& neg) {
    auto dim = common_dim(pos.dim(), neg.dim());
    SignedVector v = dim ? SignedVector(*dim) : SignedVector();
    for (const auto& [name, n] : pos) v.add(name, n);
    for (const auto& [name, n] : neg) v.add(name, -n);
    return v;
}

SignedVector SignedVector::from(const Multiset& m) { return difference(m, Multiset()); }

void SignedVector::set_dim(std::size_t dim) {
    if (dim_ && *dim_ != dim && !entries_.empty()) {
        throw DimensionMismatch("vector over dimension " + std::to_string(*dim_) + " relabelled as dimension " +
                                std::to_string(dim));
    }
    dim_ = dim;
}

Count SignedVector::coefficient(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? 0 : it->second;
}

void SignedVector::add(const std::string& name, Count n) {
    if (n == 0) return;
    auto [it, inserted] = entries_.try_emplace(name, n);
    if (inserted) return;
    it->second = checked_add(it->second, n);
    if (it->second == 0) entries_.erase(it);
}

SignedVector& SignedVector::operator+=(const SignedVector& other) {
    dim_ = common_dim(dim_, other.dim_);
    for (const auto& [name, n] : other) add(name, n);
    return *this;
}

SignedVector& SignedVector::operator-=(const SignedVector& other) {
    dim_ = common_dim(dim_, other.dim_);
    for (const auto& [name, n] : other) {
        if (n == std::numeric_limits<Count>::min()) throw std::overflow_error("multiset count overflow");
        add(name, -n);
    }
    return *this;
}

SignedVector SignedVector::operator-() const {
    SignedVector out = dim_ ? SignedVector(*dim_) : SignedVector();
    out -= *this;
    return out;
}

std::ostream& operator<<(std::ostream& os, const SignedVector& v) {
    if (v.is_zero()) return os << '0';
    bool first = true;
    for (const auto& [name, n] : v) {
        if (!first) os << ' ';
        first = false;
        os << (n > 0 ? '+' : '-');
        Count a = n > 0 ? n : -n;
        if (a != 1) os << a << '*';
        os << name;
    }
    return os;
}

Parts parts(const SignedVector& v) {
    Parts out;
    if (v.dim()) {
        out.neg.set_dim(*v.dim());
        out.pos.set_dim(*v.dim());
    }
    for (const auto& [name, n] : v) {
        if (n > 0) {
            out.pos.add(name, n);
        } else {
            if (n == std::numeric_limits<Count>::min()) throw std::overflow_error("multiset count overflow");
            out.neg.add(name, -n);
        }
    }
    return out;
}

SignedVector scaled(const SignedVector& v, Count k) {
    SignedVector out = v.dim() ? SignedVector(*v.dim()) : SignedVector();
    for (const auto& [name, n] : v) out.add(name, checked_mul(n, k));
    return out;
}

}  // namespace paritykit
