/**
 * Morphisms of additive and weak parity complexes.
 *
 * A GradedMorphism sends every generator of dimension n in the source to a
 * finite multiset of dimension-n generators in the target. Additive mode
 * extends assignments homomorphically (disjoint union); weak-parity mode
 * uses unions of subsets.
 */

#ifndef PARITYKIT_MORPHISMS_HPP
#define PARITYKIT_MORPHISMS_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "paritykit/cells.hpp"
#include "paritykit/chain.hpp"
#include "paritykit/multiset.hpp"
#include "paritykit/parity_core.hpp"

namespace paritykit {

enum class MorphismMode { additive, weak_parity };

/** Per dimension: generator name -> image multiset. */
using Assignment = std::vector<std::map<std::string, Multiset>>;

class GradedMorphism {
public:
    /**
     * Throws std::invalid_argument unless the assignment is total on the
     * source and every image names target generators of the same dimension.
     */
    GradedMorphism(std::shared_ptr<const AdditiveParityStructure> source,
                   std::shared_ptr<const AdditiveParityStructure> target, Assignment assignment);

    static GradedMorphism identity(std::shared_ptr<const AdditiveParityStructure> b);

    const AdditiveParityStructure& source() const { return *source_; }
    const AdditiveParityStructure& target() const { return *target_; }
    std::shared_ptr<const AdditiveParityStructure> source_ptr() const { return source_; }
    std::shared_ptr<const AdditiveParityStructure> target_ptr() const { return target_; }
    const Assignment& assignment() const { return assignment_; }

    const Multiset& image(std::size_t dim, const std::string& name) const;
    /** Homomorphic extension: disjoint union of images, weighted by count. */
    Multiset image(std::size_t dim, const Multiset& s) const;
    /** Union-preserving extension (for subsets). */
    Multiset image_union(std::size_t dim, const Multiset& s) const;

    /** f restricted to the n-skeleta of source and target. */
    GradedMorphism restrict_to_skeleton(std::size_t n) const;

    /** Extensional equality of assignments; source and target compared by value. */
    bool operator==(const GradedMorphism& other) const;

private:
    std::shared_ptr<const AdditiveParityStructure> source_;
    std::shared_ptr<const AdditiveParityStructure> target_;
    Assignment assignment_;
};

struct MorphismReport {
    bool valid = true;
    bool normal = true;
    std::vector<std::string> failures;
};

/**
 * Additive: f(x) moves f(∂⁻x) to f(∂⁺x). Weak parity: each f(x) is a
 * well-formed subset and, for n > 0, moves f(x⁻) to f(x⁺) (unions).
 * Weak-parity mode throws std::invalid_argument unless source and target
 * are weak parity complexes.
 */
MorphismReport validate_morphism(const GradedMorphism& f, MorphismMode mode);

/**
 * Strict movement: additionally M ∩ S⁺ = ∅ and P ∩ S⁻ = ∅ for
 * S = f(x), M = f(x⁻), P = f(x⁺). Throws if f is not a valid weak-parity
 * morphism.
 */
bool check_strict_movement(const GradedMorphism& f);

/**
 * g ∘ f. In weak-parity mode the unions are checked to be disjoint
 * (InternalInconsistency otherwise).
 */
GradedMorphism compose_morphisms(const GradedMorphism& f, const GradedMorphism& g, MorphismMode mode);

/** Columnwise image of a cell; the result is checked to be a valid ν-cell of the target. */
CellTable apply_to_cell(const GradedMorphism& f, const CellTable& t);

/** Linear map between free directed complexes, given on basis elements. */
class ChainMap {
public:
    ChainMap(FreeDirectedComplex source, FreeDirectedComplex target, std::map<GeneratorId, SignedVector> images);

    const FreeDirectedComplex& source() const { return source_; }
    const FreeDirectedComplex& target() const { return target_; }
    SignedVector apply(std::size_t dim, const SignedVector& v) const;
    const std::map<GeneratorId, SignedVector>& images() const { return images_; }

    /** ∂f = f∂ on every basis element of dimension >= 1. */
    bool commutes_with_boundary() const;
    /** ε∘f = ε on dimension 0; false when either side lacks an augmentation. */
    bool preserves_augmentation() const;

private:
    FreeDirectedComplex source_;
    FreeDirectedComplex target_;
    std::map<GeneratorId, SignedVector> images_;
};

/** Throws std::invalid_argument when f is not a valid additive morphism. */
ChainMap induced_chain_map(const GradedMorphism& f);

/** g ∘ f of chain maps, composed on basis elements. */
ChainMap compose_chain_maps(const ChainMap& f, const ChainMap& g);

/**
 * Reads a morphism back off a chain map between the complexes of `source`
 * and `target`; throws when some image is not positive.
 */
GradedMorphism morphism_from_chain_map(const ChainMap& m, std::shared_ptr<const AdditiveParityStructure> source,
                                       std::shared_ptr<const AdditiveParityStructure> target);

}  // namespace paritykit

#endif  // PARITYKIT_MORPHISMS_HPP
