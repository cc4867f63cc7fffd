#include "paritykit/cells.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace paritykit {

namespace {

std::string text(const Multiset& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

Multiset column(std::size_t dim) { return Multiset(dim); }

}  // namespace

// ----------------------------------------------------------------- tables

CellTable CellTable::make(std::vector<Multiset> neg, std::vector<Multiset> pos) {
    if (neg.empty() || neg.size() != pos.size()) {
        throw std::invalid_argument("cell rows must be non-empty and of equal length");
    }
    for (std::size_t k = 0; k < neg.size(); ++k) {
        neg[k].set_dim(k);
        pos[k].set_dim(k);
    }
    return CellTable{std::move(neg), std::move(pos)};
}

std::strong_ordering CellTable::operator<=>(const CellTable& other) const {
    if (auto c = neg.size() <=> other.neg.size(); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(neg.begin(), neg.end(), other.neg.begin(), other.neg.end());
        c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(pos.begin(), pos.end(), other.pos.begin(), other.pos.end());
}

std::ostream& operator<<(std::ostream& os, const CellTable& t) {
    os << '(';
    for (std::size_t k = 0; k < t.neg.size(); ++k) os << (k ? "," : "") << t.neg[k];
    os << "; ";
    for (std::size_t k = 0; k < t.pos.size(); ++k) os << (k ? "," : "") << t.pos[k];
    return os << ')';
}

CellCheck validate_cell(const FreeDirectedComplex& k, const CellTable& t, CellMode mode) {
    if (t.neg.empty() || t.neg.size() != t.pos.size()) return {false, "rows must be non-empty and of equal length"};
    const std::size_t n = t.dim();
    for (std::size_t j = 0; j <= n; ++j) {
        for (const Multiset* col : {&t.neg[j], &t.pos[j]}) {
            if (col->dim() && *col->dim() != j) return {false, "column " + std::to_string(j) + " has wrong dimension"};
            for (const auto& [name, _] : *col) {
                if (!k.contains(j, name)) {
                    throw UnknownGenerator("unknown generator '" + name + "' in dimension " + std::to_string(j));
                }
            }
        }
    }
    if (t.neg[n] != t.pos[n]) return {false, "top columns differ: " + text(t.neg[n]) + " vs " + text(t.pos[n])};
    for (std::size_t j = 0; j < n; ++j) {
        SignedVector expected = SignedVector::difference(t.pos[j], t.neg[j]);
        for (const Multiset* row : {&t.neg[j + 1], &t.pos[j + 1]}) {
            SignedVector got = k.boundary(j + 1, SignedVector::from(*row));
            if (got != expected) {
                std::ostringstream os;
                os << "boundary of " << *row << " is " << got << ", expected " << expected;
                return {false, os.str()};
            }
        }
    }
    if (mode == CellMode::nu) {
        if (k.augmentation(t.neg[0]) != 1 || k.augmentation(t.pos[0]) != 1) {
            return {false, "dimension-0 columns do not have augmentation 1"};
        }
    }
    return {};
}

CellTable face(const CellTable& t, std::size_t k, Side side) {
    if (k >= t.dim()) throw std::invalid_argument("face index must be below the cell dimension");
    CellTable out;
    out.neg.assign(t.neg.begin(), t.neg.begin() + static_cast<std::ptrdiff_t>(k));
    out.pos.assign(t.pos.begin(), t.pos.begin() + static_cast<std::ptrdiff_t>(k));
    const Multiset& last = side == Side::source ? t.neg[k] : t.pos[k];
    out.neg.push_back(last);
    out.pos.push_back(last);
    return out;
}

bool composable(const CellTable& x, const CellTable& y, std::size_t k) {
    return x.dim() == y.dim() && k < x.dim() && face(x, k, Side::target) == face(y, k, Side::source);
}

CellTable compose(const CellTable& x, const CellTable& y, std::size_t k, ColumnSum sum) {
    if (x.dim() != y.dim()) throw std::invalid_argument("composite of cells of different dimensions");
    if (k >= x.dim()) throw std::invalid_argument("composition index must be below the cell dimension");
    if (!composable(x, y, k)) throw std::invalid_argument("cells are not composable along dimension " + std::to_string(k));
    CellTable out;
    for (std::size_t j = 0; j <= k; ++j) {
        out.neg.push_back(x.neg[j]);
        out.pos.push_back(y.pos[j]);
    }
    for (std::size_t j = k + 1; j <= x.dim(); ++j) {
        if (sum == ColumnSum::disjoint_subsets) {
            for (auto [a, b] : {std::pair{&x.neg[j], &y.neg[j]}, std::pair{&x.pos[j], &y.pos[j]}}) {
                if (!a->is_subset() || !b->is_subset() || !disjoint(*a, *b)) {
                    throw InternalInconsistency("composite columns " + text(*a) + " and " + text(*b) +
                                                " are not disjoint subsets");
                }
            }
        }
        out.neg.push_back(disjoint_union(x.neg[j], y.neg[j]));
        out.pos.push_back(disjoint_union(x.pos[j], y.pos[j]));
    }
    return out;
}

CellTable identity(const CellTable& t) {
    CellTable out = t;
    out.neg.push_back(column(t.dim() + 1));
    out.pos.push_back(column(t.dim() + 1));
    return out;
}

CellTable lift_identity(CellTable t, std::size_t n) {
    if (n < t.dim()) throw std::invalid_argument("identity lifting cannot lower the dimension");
    while (t.dim() < n) t = identity(t);
    return t;
}

CellTable atom(const ParityStructure& c, const GeneratorId& x) {
    AtomColumns cols = mu_pi(c, x);
    return CellTable::make(std::move(cols.mu), std::move(cols.pi));
}

CellTable chain_atom(const FreeDirectedComplex& k, const GeneratorId& x) {
    AtomColumns cols = chain_atom_columns(k, x);
    return CellTable::make(std::move(cols.mu), std::move(cols.pi));
}

// ---------------------------------------------------------------- excision

std::vector<CellTable> excision_decompose(const FreeDirectedComplex& k, const CellTable& t) {
    if (t.neg.size() < 2) throw std::invalid_argument("excision needs a cell of dimension >= 1");
    const std::size_t n = t.dim();
    if (t.top().empty()) return {};

    std::vector<std::string> members;
    for (const auto& [name, count] : t.top()) {
        for (Count i = 0; i < count; ++i) members.push_back(name);
    }
    std::vector<Parts> faces;
    for (const auto& b : members) faces.push_back(parts(k.boundary(n, b)));

    // i must precede j whenever ∂⁺bᵢ ∧ ∂⁻bⱼ ≠ 0; ties broken by canonical order.
    const std::size_t m = members.size();
    std::vector<std::vector<std::size_t>> succ(m);
    std::vector<std::size_t> indegree(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && !disjoint(faces[i].pos, faces[j].neg)) {
                succ[i].push_back(j);
                ++indegree[j];
            }
        }
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < m; ++i) {
        if (indegree[i] == 0) ready.push(i);
    }
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t i = ready.top();
        ready.pop();
        order.push_back(i);
        for (std::size_t j : succ[i]) {
            if (--indegree[j] == 0) ready.push(j);
        }
    }
    if (order.size() != m) throw InternalInconsistency("top of the cell has a cyclic face relation");

    std::vector<CellTable> slices;
    SignedVector current = SignedVector::from(t.neg[n - 1]);
    current.set_dim(n - 1);
    for (std::size_t i : order) {
        CellTable slice;
        slice.neg.assign(t.neg.begin(), t.neg.begin() + static_cast<std::ptrdiff_t>(n - 1));
        slice.pos.assign(t.pos.begin(), t.pos.begin() + static_cast<std::ptrdiff_t>(n - 1));
        SignedVector next = current + SignedVector::difference(faces[i].pos, faces[i].neg);
        Parts in = parts(current);
        Parts out = parts(next);
        if (!in.neg.empty() || !out.neg.empty()) {
            throw InternalInconsistency("excision produced a non-positive intermediate column");
        }
        slice.neg.push_back(in.pos);
        slice.pos.push_back(out.pos);
        Multiset top = Multiset(n, {{members[i], 1}});
        slice.neg.push_back(top);
        slice.pos.push_back(top);
        slices.push_back(CellTable::make(std::move(slice.neg), std::move(slice.pos)));
        current = std::move(next);
    }
    if (parts(current).pos != t.pos[n - 1] || !parts(current).neg.empty()) {
        throw InternalInconsistency("excision slices do not end at the target of the cell");
    }
    return slices;
}

}  // namespace paritykit
