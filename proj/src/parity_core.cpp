#include "paritykit/parity_core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace paritykit {

namespace {

const std::vector<std::string> kNoGenerators;

void require_known(const AdditiveParityStructure& b, std::size_t dim, const Multiset& s) {
    for (const auto& [name, _] : s) {
        if (!b.contains(dim, name)) {
            throw UnknownGenerator("unknown generator '" + name + "' in dimension " + std::to_string(dim));
        }
    }
}

Multiset with_dim(Multiset m, std::size_t dim) {
    m.set_dim(dim);
    return m;
}

}  // namespace

// ------------------------------------------------- AdditiveParityStructure

AdditiveParityStructure AdditiveParityStructure::from_elements(std::vector<Element> elements) {
    AdditiveParityStructure b;
    std::size_t dims = 0;
    for (const auto& e : elements) dims = std::max(dims, e.dim + 1);
    b.generators_.resize(dims);
    b.index_.resize(dims);
    b.faces_.resize(dims);

    for (const auto& e : elements) {
        if (e.name.empty() || std::any_of(e.name.begin(), e.name.end(), [](unsigned char ch) {
                return std::isspace(ch) || !std::isprint(ch);
            })) {
            throw MalformedStructure("generator names must be non-empty printable tokens without whitespace");
        }
        if (!b.index_[e.dim].emplace(e.name, 0).second) {
            throw MalformedStructure("duplicate generator '" + e.name + "' in dimension " + std::to_string(e.dim));
        }
    }
    for (std::size_t d = 0; d < dims; ++d) {
        std::size_t i = 0;
        for (auto& [name, idx] : b.index_[d]) {
            idx = i++;
            b.generators_[d].push_back(name);
        }
        b.faces_[d].resize(b.generators_[d].size());
    }

    for (auto& e : elements) {
        if (e.dim == 0) {
            if (!e.neg.empty() || !e.pos.empty()) {
                throw MalformedStructure("dimension-0 generator '" + e.name + "' cannot have faces");
            }
            continue;
        }
        Faces f{with_dim(std::move(e.neg), e.dim - 1), with_dim(std::move(e.pos), e.dim - 1)};
        require_known(b, e.dim - 1, f.neg);
        require_known(b, e.dim - 1, f.pos);
        if (!disjoint(f.neg, f.pos)) {
            throw MalformedStructure("faces of '" + e.name + "' are not disjoint: " +
                                     [&] {
                                         std::ostringstream os;
                                         os << meet(f.neg, f.pos);
                                         return os.str();
                                     }());
        }
        b.faces_[e.dim][b.index_[e.dim].at(e.name)] = std::move(f);
    }
    return b;
}

std::size_t AdditiveParityStructure::size() const {
    return std::accumulate(generators_.begin(), generators_.end(), std::size_t{0},
                           [](std::size_t n, const auto& g) { return n + g.size(); });
}

const std::vector<std::string>& AdditiveParityStructure::generators(std::size_t dim) const {
    return dim < generators_.size() ? generators_[dim] : kNoGenerators;
}

bool AdditiveParityStructure::contains(std::size_t dim, const std::string& name) const {
    return dim < index_.size() && index_[dim].count(name) != 0;
}

std::size_t AdditiveParityStructure::index_of(std::size_t dim, const std::string& name) const {
    if (!contains(dim, name)) {
        throw UnknownGenerator("unknown generator '" + name + "' in dimension " + std::to_string(dim));
    }
    return index_[dim].at(name);
}

const Faces& AdditiveParityStructure::faces(std::size_t dim, const std::string& name) const {
    return faces_[dim][index_of(dim, name)];
}

bool AdditiveParityStructure::is_subset_structure() const {
    for (const auto& layer : faces_) {
        for (const auto& f : layer) {
            if (!f.neg.is_subset() || !f.pos.is_subset()) return false;
        }
    }
    return true;
}

std::vector<GeneratorId> AdditiveParityStructure::all_generators() const {
    std::vector<GeneratorId> out;
    out.reserve(size());
    for (std::size_t d = 0; d < generators_.size(); ++d) {
        for (const auto& name : generators_[d]) out.push_back({name, d});
    }
    return out;
}

std::vector<Element> AdditiveParityStructure::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t d = 0; d < generators_.size(); ++d) {
        for (std::size_t i = 0; i < generators_[d].size(); ++i) {
            out.push_back({generators_[d][i], d, faces_[d][i].neg, faces_[d][i].pos});
        }
    }
    return out;
}

bool AdditiveParityStructure::operator==(const AdditiveParityStructure& other) const {
    if (generators_ != other.generators_) return false;
    for (std::size_t d = 0; d < faces_.size(); ++d) {
        for (std::size_t i = 0; i < faces_[d].size(); ++i) {
            if (faces_[d][i].neg != other.faces_[d][i].neg || faces_[d][i].pos != other.faces_[d][i].pos) {
                return false;
            }
        }
    }
    return true;
}

// --------------------------------------------------------- ParityStructure

ParityStructure ParityStructure::from_additive(AdditiveParityStructure base) {
    if (!base.is_subset_structure()) {
        throw MalformedStructure("face data has a multiplicity >= 2; not a parity structure");
    }
    ParityStructure c;
    c.base_ = std::move(base);
    return c;
}

ParityStructure ParityStructure::from_elements(std::vector<Element> elements) {
    return from_additive(AdditiveParityStructure::from_elements(std::move(elements)));
}

// ------------------------------------------------------------ face calculus

FaceImages face_images(const AdditiveParityStructure& b, std::size_t dim, const Multiset& s) {
    if (dim == 0) throw std::invalid_argument("face images need a multiset of dimension >= 1");
    Multiset in = s;
    in.set_dim(dim);
    require_known(b, dim, in);
    FaceImages out{Multiset(dim - 1), Multiset(dim - 1), Multiset(dim - 1), Multiset(dim - 1)};
    for (const auto& [name, n] : in) {
        const Faces& f = b.faces(dim, name);
        for (const auto& [face, k] : f.neg) out.phi_neg.add(face, checked_mul(k, n));
        for (const auto& [face, k] : f.pos) out.phi_pos.add(face, checked_mul(k, n));
    }
    out.neg = difference(out.phi_neg, out.phi_pos);
    out.pos = difference(out.phi_pos, out.phi_neg);
    return out;
}

SubsetFaces subset_faces(const ParityStructure& c, std::size_t dim, const Multiset& s) {
    if (dim == 0) throw std::invalid_argument("subset faces need a subset of dimension >= 1");
    Multiset in = s;
    in.set_dim(dim);
    require_known(c.additive(), dim, in);
    SubsetFaces out{Multiset(dim - 1), Multiset(dim - 1), Multiset(dim - 1), Multiset(dim - 1)};
    for (const auto& [name, _] : in) {
        const Faces& f = c.faces(dim, name);
        out.union_neg = join(out.union_neg, f.neg);
        out.union_pos = join(out.union_pos, f.pos);
    }
    out.neg = difference(out.union_neg, out.union_pos);
    out.pos = difference(out.union_pos, out.union_neg);
    return out;
}

bool is_well_formed(const ParityStructure& c, std::size_t dim, const Multiset& s) {
    Multiset in = s;
    in.set_dim(dim);
    require_known(c.additive(), dim, in);
    if (!in.is_subset()) return false;
    if (dim == 0) return in.support_size() == 1;
    Multiset seen_neg(dim - 1);
    Multiset seen_pos(dim - 1);
    for (const auto& [name, _] : in) {
        const Faces& f = c.faces(dim, name);
        if (!disjoint(seen_neg, f.neg) || !disjoint(seen_pos, f.pos)) return false;
        seen_neg = disjoint_union(seen_neg, f.neg);
        seen_pos = disjoint_union(seen_pos, f.pos);
    }
    return true;
}

AtomColumns mu_pi(const ParityStructure& c, const GeneratorId& x) {
    if (!c.contains(x.dim, x.name)) throw UnknownGenerator("unknown generator '" + x.name + "'");
    AtomColumns cols;
    cols.mu.resize(x.dim + 1);
    cols.pi.resize(x.dim + 1);
    cols.mu[x.dim] = Multiset(x.dim, {{x.name, 1}});
    cols.pi[x.dim] = cols.mu[x.dim];
    for (std::size_t k = x.dim; k > 0; --k) {
        cols.mu[k - 1] = subset_faces(c, k, cols.mu[k]).neg;
        cols.pi[k - 1] = subset_faces(c, k, cols.pi[k]).pos;
    }
    return cols;
}

AtomColumns iterated_faces(const AdditiveParityStructure& b, const GeneratorId& x) {
    if (!b.contains(x.dim, x.name)) throw UnknownGenerator("unknown generator '" + x.name + "'");
    AtomColumns cols;
    cols.mu.resize(x.dim + 1);
    cols.pi.resize(x.dim + 1);
    cols.mu[x.dim] = Multiset(x.dim, {{x.name, 1}});
    cols.pi[x.dim] = cols.mu[x.dim];
    for (std::size_t k = x.dim; k > 0; --k) {
        cols.mu[k - 1] = face_images(b, k, cols.mu[k]).neg;
        cols.pi[k - 1] = face_images(b, k, cols.pi[k]).pos;
    }
    return cols;
}

bool moves(const AdditiveParityStructure& b, std::size_t dim, const Multiset& s, const Multiset& m,
           const Multiset& p, MoveMode mode) {
    if (dim == 0) throw std::invalid_argument("a moving multiset must have dimension >= 1");
    Multiset lo_m = m;
    Multiset lo_p = p;
    lo_m.set_dim(dim - 1);
    lo_p.set_dim(dim - 1);
    require_known(b, dim - 1, lo_m);
    require_known(b, dim - 1, lo_p);

    if (mode == MoveMode::additive) {
        FaceImages img = face_images(b, dim, s);
        return img.neg == difference(lo_m, lo_p) && img.pos == difference(lo_p, lo_m);
    }

    if (!b.is_subset_structure()) {
        throw std::invalid_argument("subset movement needs a parity structure");
    }
    ParityStructure c = ParityStructure::from_additive(b);
    if (!is_well_formed(c, dim, s)) {
        throw std::invalid_argument("subset movement is only defined for well-formed subsets");
    }
    SubsetFaces sf = subset_faces(c, dim, s);
    bool ok = sf.neg == difference(lo_m, lo_p) && sf.pos == difference(lo_p, lo_m);
    if (mode == MoveMode::strict) {
        ok = ok && disjoint(lo_m, sf.union_pos) && disjoint(lo_p, sf.union_neg);
    }
    return ok;
}

AdditiveParityStructure skeleton(const AdditiveParityStructure& b, std::size_t n) {
    std::vector<Element> kept;
    for (auto& e : b.elements()) {
        if (e.dim <= n) kept.push_back(std::move(e));
    }
    return AdditiveParityStructure::from_elements(std::move(kept));
}

ParityStructure skeleton(const ParityStructure& c, std::size_t n) {
    return ParityStructure::from_additive(skeleton(c.additive(), n));
}

}  // namespace paritykit
