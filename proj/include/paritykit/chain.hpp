/**
 * The free directed chain complex ZB generated by an additive parity
 * structure: boundaries, the canonical augmentation, and the basis-level
 * checks (∂∂ = 0, normality, unitality, well-formed elements).
 */

#ifndef PARITYKIT_CHAIN_HPP
#define PARITYKIT_CHAIN_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "paritykit/multiset.hpp"
#include "paritykit/parity_core.hpp"

namespace paritykit {

class FreeDirectedComplex {
public:
    FreeDirectedComplex() = default;

    /**
     * ∂x = ∂⁺x - ∂⁻x on every generator. When `b` is normal the canonical
     * augmentation (every dimension-0 generator ↦ 1) is attached.
     */
    static FreeDirectedComplex from_structure(const AdditiveParityStructure& b);

    /** Complex given directly by generator boundaries; no augmentation. */
    static FreeDirectedComplex from_boundaries(std::vector<std::vector<std::string>> basis,
                                               std::map<GeneratorId, SignedVector> boundaries);

    std::size_t dimension_count() const { return basis_.size(); }
    const std::vector<std::string>& basis(std::size_t dim) const;
    bool contains(std::size_t dim, const std::string& name) const;

    /** Boundary of a basis element of dimension >= 1. */
    const SignedVector& boundary(std::size_t dim, const std::string& name) const;
    /** Linear extension of the boundary to a chain of dimension `dim` >= 1. */
    SignedVector boundary(std::size_t dim, const SignedVector& v) const;

    bool has_augmentation() const { return augmented_; }
    /** ε of a 0-chain; throws std::logic_error when no augmentation is attached. */
    Count augmentation(const SignedVector& v) const;
    Count augmentation(const Multiset& v) const { return augmentation(SignedVector::from(v)); }

    /** Basis extraction: ∂±x are the parts of ∂x. */
    AdditiveParityStructure extract_basis() const;

private:
    std::vector<std::vector<std::string>> basis_;
    std::vector<std::map<std::string, SignedVector>> boundary_;
    bool augmented_ = false;
};

struct ChainReport {
    bool boundary_squared_zero = true;
    /** Generators x with ∂∂x ≠ 0. */
    std::vector<GeneratorId> offending;
    bool normal = true;
    bool unital = true;
    std::vector<GeneratorId> non_unital;
    /** ε∂ = 0 on every 1-generator; only meaningful with an augmentation. */
    bool augmentation_compatible = true;
};

ChainReport check_complex(const FreeDirectedComplex& k);

/**
 * Columns (∂⁻)ᵐx and (∂⁺)ᵐx computed by alternately taking the boundary
 * and splitting it into parts; indexed by dimension.
 */
AtomColumns chain_atom_columns(const FreeDirectedComplex& k, const GeneratorId& x);

/**
 * Dimension 0: ε(v) = 1 (needs an augmentation). Dimension > 0: v is
 * radical and distinct members have disjoint ∂⁻ and disjoint ∂⁺.
 */
bool is_well_formed_element(const FreeDirectedComplex& k, std::size_t dim, const Multiset& v);

/** One line per generator: "name@dim: signed face list". */
void write_boundary_report(std::ostream& os, const FreeDirectedComplex& k);

}  // namespace paritykit

#endif  // PARITYKIT_CHAIN_HPP
