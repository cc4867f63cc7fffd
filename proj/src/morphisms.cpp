#include "paritykit/morphisms.hpp"

#include <sstream>
#include <stdexcept>

namespace paritykit {

namespace {

std::string text(const Multiset& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

std::string label(std::size_t dim, const std::string& name) { return name + "@" + std::to_string(dim); }

void require_weak_parity(const AdditiveParityStructure& b, const char* role) {
    if (!b.is_subset_structure() ||
        !validate(ParityStructure::from_additive(b)).meets(Classification::weak_parity_complex)) {
        throw std::invalid_argument(std::string("weak-parity mode needs the ") + role +
                                    " to be a weak parity complex");
    }
}

bool same_basis(const FreeDirectedComplex& a, const FreeDirectedComplex& b) {
    if (a.dimension_count() != b.dimension_count()) return false;
    for (std::size_t n = 0; n < a.dimension_count(); ++n) {
        if (a.basis(n) != b.basis(n)) return false;
    }
    return true;
}

}  // namespace

GradedMorphism::GradedMorphism(std::shared_ptr<const AdditiveParityStructure> source,
                               std::shared_ptr<const AdditiveParityStructure> target, Assignment assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
    if (!source_ || !target_) throw std::invalid_argument("morphism needs a source and a target");
    for (std::size_t n = source_->dimension_count(); n < assignment_.size(); ++n) {
        if (!assignment_[n].empty()) {
            throw std::invalid_argument("assignment in dimension " + std::to_string(n) + " is beyond the source");
        }
    }
    assignment_.resize(source_->dimension_count());
    for (std::size_t n = 0; n < assignment_.size(); ++n) {
        auto& row = assignment_[n];
        for (const auto& name : source_->generators(n)) {
            if (!row.count(name)) throw std::invalid_argument("no image for " + label(n, name));
        }
        for (auto& [name, image] : row) {
            if (!source_->contains(n, name)) throw UnknownGenerator("unknown source generator " + label(n, name));
            if (image.dim() && *image.dim() != n) {
                throw DimensionMismatch("image of " + label(n, name) + " has the wrong dimension");
            }
            image.set_dim(n);
            for (const auto& [y, _] : image) {
                if (!target_->contains(n, y)) {
                    throw UnknownGenerator("image of " + label(n, name) + " names unknown target generator " +
                                           label(n, y));
                }
            }
        }
    }
}

GradedMorphism GradedMorphism::identity(std::shared_ptr<const AdditiveParityStructure> b) {
    Assignment a(b->dimension_count());
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (const auto& name : b->generators(n)) a[n].emplace(name, Multiset(n, {{name, 1}}));
    }
    return GradedMorphism(b, b, std::move(a));
}

const Multiset& GradedMorphism::image(std::size_t dim, const std::string& name) const {
    if (dim >= assignment_.size()) throw UnknownGenerator("unknown source generator " + label(dim, name));
    auto it = assignment_[dim].find(name);
    if (it == assignment_[dim].end()) throw UnknownGenerator("unknown source generator " + label(dim, name));
    return it->second;
}

Multiset GradedMorphism::image(std::size_t dim, const Multiset& s) const {
    Multiset out(dim);
    for (const auto& [name, count] : s) {
        for (const auto& [y, c] : image(dim, name)) out.add(y, checked_mul(count, c));
    }
    return out;
}

Multiset GradedMorphism::image_union(std::size_t dim, const Multiset& s) const {
    Multiset out(dim);
    for (const auto& [name, _] : s) out = join(out, image(dim, name));
    out.set_dim(dim);
    return out;
}

GradedMorphism GradedMorphism::restrict_to_skeleton(std::size_t n) const {
    auto src = std::make_shared<const AdditiveParityStructure>(skeleton(*source_, n));
    auto tgt = std::make_shared<const AdditiveParityStructure>(skeleton(*target_, n));
    Assignment a = assignment_;
    if (a.size() > n + 1) a.resize(n + 1);
    return GradedMorphism(std::move(src), std::move(tgt), std::move(a));
}

bool GradedMorphism::operator==(const GradedMorphism& other) const {
    return *source_ == *other.source_ && *target_ == *other.target_ && assignment_ == other.assignment_;
}

MorphismReport validate_morphism(const GradedMorphism& f, MorphismMode mode) {
    const AdditiveParityStructure& src = f.source();
    const AdditiveParityStructure& tgt = f.target();
    if (mode == MorphismMode::weak_parity) {
        require_weak_parity(src, "source");
        require_weak_parity(tgt, "target");
    }

    MorphismReport report;
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.failures.push_back(std::move(msg));
    };

    std::optional<ParityStructure> c;
    if (mode == MorphismMode::weak_parity) c = ParityStructure::from_additive(tgt);

    for (std::size_t n = 0; n < src.dimension_count(); ++n) {
        for (const auto& x : src.generators(n)) {
            const Multiset& fx = f.image(n, x);
            if (fx.support_size() != 1 || fx.total() != 1) report.normal = false;

            if (mode == MorphismMode::additive) {
                if (n == 0) continue;
                const Faces& fc = src.faces(n, x);
                Multiset m = f.image(n - 1, fc.neg);
                Multiset p = f.image(n - 1, fc.pos);
                if (!moves(tgt, n, fx, m, p, MoveMode::additive)) {
                    fail("f(" + x + ") = " + text(fx) + " does not move " + text(m) + " to " + text(p));
                }
                continue;
            }

            if (!fx.is_subset() || !is_well_formed(*c, n, fx)) {
                fail("f(" + x + ") = " + text(fx) + " is not well-formed");
                continue;
            }
            if (n == 0) continue;
            const Faces& fc = src.faces(n, x);
            Multiset m = f.image_union(n - 1, fc.neg);
            Multiset p = f.image_union(n - 1, fc.pos);
            if (!moves(tgt, n, fx, m, p, MoveMode::subset)) {
                fail("f(" + x + ") = " + text(fx) + " does not move " + text(m) + " to " + text(p));
            }
        }
    }
    return report;
}

bool check_strict_movement(const GradedMorphism& f) {
    MorphismReport r = validate_morphism(f, MorphismMode::weak_parity);
    if (!r.valid) throw std::invalid_argument("strict movement needs a valid weak-parity morphism");
    const AdditiveParityStructure& src = f.source();
    for (std::size_t n = 1; n < src.dimension_count(); ++n) {
        for (const auto& x : src.generators(n)) {
            const Faces& fc = src.faces(n, x);
            if (!moves(f.target(), n, f.image(n, x), f.image_union(n - 1, fc.neg), f.image_union(n - 1, fc.pos),
                       MoveMode::strict)) {
                return false;
            }
        }
    }
    return true;
}

GradedMorphism compose_morphisms(const GradedMorphism& f, const GradedMorphism& g, MorphismMode mode) {
    if (!(f.target() == g.source())) throw std::invalid_argument("morphisms are not composable");
    Assignment a(f.source().dimension_count());
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (const auto& x : f.source().generators(n)) {
            const Multiset& fx = f.image(n, x);
            if (mode == MorphismMode::additive) {
                a[n].emplace(x, g.image(n, fx));
                continue;
            }
            Multiset sum = g.image(n, fx);
            Multiset uni = g.image_union(n, fx);
            if (sum != uni) {
                throw InternalInconsistency("images under g of " + text(fx) + " are not pairwise disjoint");
            }
            a[n].emplace(x, std::move(uni));
        }
    }
    return GradedMorphism(f.source_ptr(), g.target_ptr(), std::move(a));
}

CellTable apply_to_cell(const GradedMorphism& f, const CellTable& t) {
    FreeDirectedComplex ks = FreeDirectedComplex::from_structure(f.source());
    FreeDirectedComplex kt = FreeDirectedComplex::from_structure(f.target());
    const CellMode mode = ks.has_augmentation() && kt.has_augmentation() ? CellMode::nu : CellMode::rho;
    if (CellCheck in = validate_cell(ks, t, mode); !in.valid) {
        throw std::invalid_argument("not a cell of the source: " + in.reason);
    }
    if (!validate_morphism(f, MorphismMode::additive).valid) {
        throw std::invalid_argument("morphism is not valid");
    }
    if (mode == CellMode::nu && f.source().dimension_count() > 0) {
        for (const auto& v : f.source().generators(0)) {
            if (f.image(0, v).total() != 1) {
                throw std::invalid_argument("image of " + label(0, v) + " is not a single vertex");
            }
        }
    }
    std::vector<Multiset> neg;
    std::vector<Multiset> pos;
    for (std::size_t k = 0; k <= t.dim(); ++k) {
        neg.push_back(f.image(k, t.neg[k]));
        pos.push_back(f.image(k, t.pos[k]));
    }
    CellTable out = CellTable::make(std::move(neg), std::move(pos));
    if (CellCheck res = validate_cell(kt, out, mode); !res.valid) {
        throw InternalInconsistency("image of a cell is not a cell: " + res.reason);
    }
    return out;
}

// ------------------------------------------------------------- chain maps

ChainMap::ChainMap(FreeDirectedComplex source, FreeDirectedComplex target, std::map<GeneratorId, SignedVector> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    for (std::size_t n = 0; n < source_.dimension_count(); ++n) {
        for (const auto& name : source_.basis(n)) {
            if (!images_.count(GeneratorId{name, n})) throw std::invalid_argument("no image for " + label(n, name));
        }
    }
    for (auto& [id, v] : images_) {
        if (!source_.contains(id.dim, id.name)) throw UnknownGenerator("unknown source generator " + label(id.dim, id.name));
        for (const auto& [y, _] : v) {
            if (!target_.contains(id.dim, y)) throw UnknownGenerator("unknown target generator " + label(id.dim, y));
        }
        v.set_dim(id.dim);
    }
}

SignedVector ChainMap::apply(std::size_t dim, const SignedVector& v) const {
    SignedVector out(dim);
    for (const auto& [name, coeff] : v) {
        auto it = images_.find(GeneratorId{name, dim});
        if (it == images_.end()) throw UnknownGenerator("unknown source generator " + label(dim, name));
        out += scaled(it->second, coeff);
    }
    return out;
}

bool ChainMap::commutes_with_boundary() const {
    for (std::size_t n = 1; n < source_.dimension_count(); ++n) {
        for (const auto& name : source_.basis(n)) {
            const SignedVector& fx = images_.at(GeneratorId{name, n});
            if (target_.boundary(n, fx) != apply(n - 1, source_.boundary(n, name))) return false;
        }
    }
    return true;
}

bool ChainMap::preserves_augmentation() const {
    if (!source_.has_augmentation() || !target_.has_augmentation()) return false;
    if (source_.dimension_count() == 0) return true;
    for (const auto& name : source_.basis(0)) {
        SignedVector x(0, {{name, 1}});
        if (target_.augmentation(images_.at(GeneratorId{name, 0})) != source_.augmentation(x)) return false;
    }
    return true;
}

ChainMap induced_chain_map(const GradedMorphism& f) {
    if (!validate_morphism(f, MorphismMode::additive).valid) {
        throw std::invalid_argument("induced chain map needs a valid additive morphism");
    }
    std::map<GeneratorId, SignedVector> images;
    for (std::size_t n = 0; n < f.source().dimension_count(); ++n) {
        for (const auto& x : f.source().generators(n)) {
            SignedVector v = SignedVector::from(f.image(n, x));
            v.set_dim(n);
            images.emplace(GeneratorId{x, n}, std::move(v));
        }
    }
    return ChainMap(FreeDirectedComplex::from_structure(f.source()), FreeDirectedComplex::from_structure(f.target()),
                    std::move(images));
}

ChainMap compose_chain_maps(const ChainMap& f, const ChainMap& g) {
    if (!same_basis(f.target(), g.source())) throw std::invalid_argument("chain maps are not composable");
    std::map<GeneratorId, SignedVector> images;
    for (const auto& [id, v] : f.images()) images.emplace(id, g.apply(id.dim, v));
    return ChainMap(f.source(), g.target(), std::move(images));
}

GradedMorphism morphism_from_chain_map(const ChainMap& m, std::shared_ptr<const AdditiveParityStructure> source,
                                       std::shared_ptr<const AdditiveParityStructure> target) {
    if (!same_basis(m.source(), FreeDirectedComplex::from_structure(*source)) ||
        !same_basis(m.target(), FreeDirectedComplex::from_structure(*target))) {
        throw std::invalid_argument("chain map does not match the given structures");
    }
    Assignment a(source->dimension_count());
    for (const auto& [id, v] : m.images()) {
        Parts p = parts(v);
        if (!p.neg.empty()) {
            throw std::invalid_argument("image of " + label(id.dim, id.name) + " is not positive");
        }
        p.pos.set_dim(id.dim);
        a[id.dim].emplace(id.name, std::move(p.pos));
    }
    return GradedMorphism(std::move(source), std::move(target), std::move(a));
}

}  // namespace paritykit
