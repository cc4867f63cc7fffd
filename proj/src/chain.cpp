#include "paritykit/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace paritykit {

namespace {
const std::vector<std::string> kEmptyBasis;
}

FreeDirectedComplex FreeDirectedComplex::from_structure(const AdditiveParityStructure& b) {
    FreeDirectedComplex k;
    k.basis_.resize(b.dimension_count());
    k.boundary_.resize(b.dimension_count());
    for (std::size_t d = 0; d < b.dimension_count(); ++d) {
        k.basis_[d] = b.generators(d);
        if (d == 0) continue;
        for (const auto& name : b.generators(d)) {
            const Faces& f = b.faces(d, name);
            SignedVector v = SignedVector::difference(f.pos, f.neg);
            v.set_dim(d - 1);
            k.boundary_[d].emplace(name, std::move(v));
        }
    }
    bool normal = true;
    for (const auto& name : b.generators(1)) {
        const Faces& f = b.faces(1, name);
        normal = normal && f.neg.total() == 1 && f.pos.total() == 1;
    }
    k.augmented_ = normal;
    return k;
}

FreeDirectedComplex FreeDirectedComplex::from_boundaries(std::vector<std::vector<std::string>> basis,
                                                         std::map<GeneratorId, SignedVector> boundaries) {
    FreeDirectedComplex k;
    k.basis_ = std::move(basis);
    k.boundary_.resize(k.basis_.size());
    for (auto& layer : k.basis_) std::sort(layer.begin(), layer.end());
    for (std::size_t d = 1; d < k.basis_.size(); ++d) {
        for (const auto& name : k.basis_[d]) {
            auto it = boundaries.find({name, d});
            SignedVector v = it == boundaries.end() ? SignedVector(d - 1) : it->second;
            v.set_dim(d - 1);
            for (const auto& [face, _] : v) {
                if (!k.contains(d - 1, face)) throw UnknownGenerator("unknown face '" + face + "'");
            }
            k.boundary_[d].emplace(name, std::move(v));
        }
    }
    return k;
}

const std::vector<std::string>& FreeDirectedComplex::basis(std::size_t dim) const {
    return dim < basis_.size() ? basis_[dim] : kEmptyBasis;
}

bool FreeDirectedComplex::contains(std::size_t dim, const std::string& name) const {
    const auto& layer = basis(dim);
    return std::binary_search(layer.begin(), layer.end(), name);
}

const SignedVector& FreeDirectedComplex::boundary(std::size_t dim, const std::string& name) const {
    if (dim == 0 || dim >= boundary_.size()) {
        throw UnknownGenerator("no boundary for '" + name + "' in dimension " + std::to_string(dim));
    }
    auto it = boundary_[dim].find(name);
    if (it == boundary_[dim].end()) throw UnknownGenerator("unknown generator '" + name + "'");
    return it->second;
}

SignedVector FreeDirectedComplex::boundary(std::size_t dim, const SignedVector& v) const {
    if (dim == 0) throw std::invalid_argument("0-chains have no boundary");
    SignedVector out(dim - 1);
    for (const auto& [name, n] : v) out += scaled(boundary(dim, name), n);
    return out;
}

Count FreeDirectedComplex::augmentation(const SignedVector& v) const {
    if (!augmented_) throw std::logic_error("complex carries no augmentation");
    Count sum = 0;
    for (const auto& [name, n] : v) {
        if (!contains(0, name)) throw UnknownGenerator("unknown generator '" + name + "'");
        sum = checked_add(sum, n);
    }
    return sum;
}

AdditiveParityStructure FreeDirectedComplex::extract_basis() const {
    std::vector<Element> elements;
    for (std::size_t d = 0; d < basis_.size(); ++d) {
        for (const auto& name : basis_[d]) {
            Element e{name, d, {}, {}};
            if (d > 0) {
                Parts p = parts(boundary(d, name));
                e.neg = std::move(p.neg);
                e.pos = std::move(p.pos);
            }
            elements.push_back(std::move(e));
        }
    }
    return AdditiveParityStructure::from_elements(std::move(elements));
}

AtomColumns chain_atom_columns(const FreeDirectedComplex& k, const GeneratorId& x) {
    if (!k.contains(x.dim, x.name)) throw UnknownGenerator("unknown generator '" + x.name + "'");
    AtomColumns cols;
    cols.mu.resize(x.dim + 1);
    cols.pi.resize(x.dim + 1);
    cols.mu[x.dim] = Multiset(x.dim, {{x.name, 1}});
    cols.pi[x.dim] = cols.mu[x.dim];
    for (std::size_t d = x.dim; d > 0; --d) {
        cols.mu[d - 1] = parts(k.boundary(d, SignedVector::from(cols.mu[d]))).neg;
        cols.pi[d - 1] = parts(k.boundary(d, SignedVector::from(cols.pi[d]))).pos;
        cols.mu[d - 1].set_dim(d - 1);
        cols.pi[d - 1].set_dim(d - 1);
    }
    return cols;
}

ChainReport check_complex(const FreeDirectedComplex& k) {
    ChainReport r;
    for (std::size_t d = 2; d < k.dimension_count(); ++d) {
        for (const auto& name : k.basis(d)) {
            if (!k.boundary(d - 1, k.boundary(d, name)).is_zero()) {
                r.boundary_squared_zero = false;
                r.offending.push_back({name, d});
            }
        }
    }
    for (const auto& name : k.basis(1)) {
        Parts p = parts(k.boundary(1, name));
        if (p.neg.total() != 1 || p.pos.total() != 1) r.normal = false;
        if (k.has_augmentation() && k.augmentation(k.boundary(1, name)) != 0) r.augmentation_compatible = false;
    }
    if (!r.normal || !k.has_augmentation()) {
        r.unital = false;
        return r;
    }
    for (std::size_t d = 0; d < k.dimension_count(); ++d) {
        for (const auto& name : k.basis(d)) {
            AtomColumns cols = chain_atom_columns(k, {name, d});
            if (k.augmentation(cols.mu[0]) != 1 || k.augmentation(cols.pi[0]) != 1) {
                r.unital = false;
                r.non_unital.push_back({name, d});
            }
        }
    }
    return r;
}

bool is_well_formed_element(const FreeDirectedComplex& k, std::size_t dim, const Multiset& v) {
    for (const auto& [name, _] : v) {
        if (!k.contains(dim, name)) throw UnknownGenerator("unknown generator '" + name + "'");
    }
    if (dim == 0) return k.augmentation(v) == 1;
    if (!is_radical(v)) return false;
    std::vector<Parts> faces;
    for (const auto& [name, _] : v) faces.push_back(parts(k.boundary(dim, name)));
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            if (!disjoint(faces[i].neg, faces[j].neg) || !disjoint(faces[i].pos, faces[j].pos)) return false;
        }
    }
    return true;
}

void write_boundary_report(std::ostream& os, const FreeDirectedComplex& k) {
    for (std::size_t d = 0; d < k.dimension_count(); ++d) {
        for (const auto& name : k.basis(d)) {
            os << name << '@' << d << ": ";
            if (d == 0) {
                os << "eps=" << (k.has_augmentation() ? "1" : "-") << '\n';
            } else {
                os << k.boundary(d, name) << '\n';
            }
        }
    }
}

}  // namespace paritykit
