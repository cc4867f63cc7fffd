/**
 * Parity structures and additive parity structures.
 *
 * An additive parity structure assigns to every generator x of dimension
 * n+1 a disjoint pair of finite multisets (∂⁻x, ∂⁺x) of dimension-n
 * generators. A parity structure is the special case in which both are
 * subsets. This header provides the face calculus on both (Φ±, ∂±, S∓,
 * S±), well-formedness, the μ/π columns, movement, skeleta, and the axiom
 * validator that classifies a structure.
 */

#ifndef PARITYKIT_PARITY_CORE_HPP
#define PARITYKIT_PARITY_CORE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paritykit/multiset.hpp"

namespace paritykit {

/** A face reference or generator lookup named something that does not exist. */
class UnknownGenerator : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/** Structurally invalid input (duplicate names, overlapping faces, ...). */
class MalformedStructure : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/** Negative and positive faces of one generator. */
struct Faces {
    Multiset neg;
    Multiset pos;
};

/** One generator together with its faces, as read from or written to a fixture. */
struct Element {
    std::string name;
    std::size_t dim = 0;
    Multiset neg;
    Multiset pos;
};

class AdditiveParityStructure {
public:
    AdditiveParityStructure() = default;

    /**
     * Builds a structure from a flat element list (any order).
     *
     * Throws MalformedStructure on duplicate names within a dimension,
     * faces on dimension-0 elements, or overlapping ∂⁻x/∂⁺x; throws
     * UnknownGenerator when a face names a missing generator.
     */
    static AdditiveParityStructure from_elements(std::vector<Element> elements);

    /** Number of populated dimensions (top dimension + 1); 0 when empty. */
    std::size_t dimension_count() const { return generators_.size(); }
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    /** Generators of dimension `dim`, in canonical (name) order. */
    const std::vector<std::string>& generators(std::size_t dim) const;
    bool contains(std::size_t dim, const std::string& name) const;
    bool contains(const GeneratorId& id) const { return contains(id.dim, id.name); }
    /** Index of `name` within generators(dim). */
    std::size_t index_of(std::size_t dim, const std::string& name) const;

    /** Faces of a generator of dimension >= 1. */
    const Faces& faces(std::size_t dim, const std::string& name) const;
    const Faces& faces(const GeneratorId& id) const { return faces(id.dim, id.name); }

    /** True iff every face multiset is a subset. */
    bool is_subset_structure() const;

    /** All generators in canonical (dim, name) order. */
    std::vector<GeneratorId> all_generators() const;
    std::vector<Element> elements() const;

    bool operator==(const AdditiveParityStructure& other) const;

private:
    std::vector<std::vector<std::string>> generators_;
    std::vector<std::map<std::string, std::size_t>> index_;
    std::vector<std::vector<Faces>> faces_;
};

/** Additive parity structure whose faces are all subsets. */
class ParityStructure {
public:
    ParityStructure() = default;

    /** Throws MalformedStructure if some face has a count >= 2. */
    static ParityStructure from_additive(AdditiveParityStructure base);
    static ParityStructure from_elements(std::vector<Element> elements);

    const AdditiveParityStructure& additive() const { return base_; }

    std::size_t dimension_count() const { return base_.dimension_count(); }
    std::size_t size() const { return base_.size(); }
    const std::vector<std::string>& generators(std::size_t dim) const { return base_.generators(dim); }
    bool contains(std::size_t dim, const std::string& name) const { return base_.contains(dim, name); }
    const Faces& faces(std::size_t dim, const std::string& name) const { return base_.faces(dim, name); }
    std::vector<GeneratorId> all_generators() const { return base_.all_generators(); }

    bool operator==(const ParityStructure& other) const { return base_ == other.base_; }

private:
    AdditiveParityStructure base_;
};

// ------------------------------------------------------------ face calculus

/** Φ±(S) and ∂±(S) = Φ±(S) \ Φ∓(S) for a multiset S of dimension-n generators. */
struct FaceImages {
    Multiset phi_neg;
    Multiset phi_pos;
    Multiset neg;
    Multiset pos;
};

/** Throws UnknownGenerator, or std::invalid_argument when dim == 0. */
FaceImages face_images(const AdditiveParityStructure& b, std::size_t dim, const Multiset& s);

/** S⁻, S⁺ (unions) and S∓ = S⁻ \ S⁺, S± = S⁺ \ S⁻. */
struct SubsetFaces {
    Multiset union_neg;
    Multiset union_pos;
    Multiset neg;
    Multiset pos;
};

SubsetFaces subset_faces(const ParityStructure& c, std::size_t dim, const Multiset& s);

/**
 * Dimension 0: S is a singleton. Dimension > 0: S is a subset whose
 * distinct members have disjoint negative faces and disjoint positive faces.
 */
bool is_well_formed(const ParityStructure& c, std::size_t dim, const Multiset& s);

/** Columns μ(x)₀..μ(x)ₙ and π(x)₀..π(x)ₙ, indexed by dimension. */
struct AtomColumns {
    std::vector<Multiset> mu;
    std::vector<Multiset> pi;
};

AtomColumns mu_pi(const ParityStructure& c, const GeneratorId& x);

/**
 * Columns (∂⁻)ᵐx and (∂⁺)ᵐx computed with the multiset calculus, indexed
 * by dimension like mu_pi.
 */
AtomColumns iterated_faces(const AdditiveParityStructure& b, const GeneratorId& x);

enum class MoveMode { additive, subset, strict };

/**
 * Whether S (over dimension `dim`) moves M to P (over dimension dim-1).
 *
 * Subset and strict modes require a subset structure and a well-formed S;
 * std::invalid_argument otherwise.
 */
bool moves(const AdditiveParityStructure& b, std::size_t dim, const Multiset& s, const Multiset& m,
           const Multiset& p, MoveMode mode);

/** Drops all generators of dimension > n. */
AdditiveParityStructure skeleton(const AdditiveParityStructure& b, std::size_t n);
ParityStructure skeleton(const ParityStructure& c, std::size_t n);

// -------------------------------------------------------------- validation

/** Result of deciding whether a finite relation extends to a partial order. */
struct OrderWitness {
    bool acyclic = true;
    /** Topological order (lexicographically least) when acyclic. */
    std::vector<GeneratorId> order;
    /** Closed directed walk (first element repeated at the end) otherwise. */
    std::vector<GeneratorId> cycle;
};

struct AxiomFailure {
    std::string axiom;
    std::vector<GeneratorId> generators;
    std::string explanation;
};

enum class Classification {
    structure_only,
    additive_parity_complex,
    weak_parity_complex,
    parity_complex,
};

struct ValidationReport {
    bool subset_faces = true;
    bool disjoint = true;
    bool globular = true;
    /** Subset-form globularity; set only when faces are subsets and all x± are well-formed. */
    std::optional<bool> globular_subset;
    bool normal = true;
    bool unital = true;
    /** μ/π well-formedness; set only for subset-faced structures. */
    std::optional<bool> unital_parity;
    /** Iterated parts reach augmentation-1 elements; false when not normal. */
    bool unital_chain = true;
    bool weakly_loop_free = true;
    bool steiner_loop_free = true;
    bool strongly_loop_free = true;

    /** Weak loop-freeness witnesses, one per dimension n >= 1 (index n-1). */
    std::vector<OrderWitness> weak_witnesses;
    /** Steiner loop-freeness witnesses, one per level n >= 0. */
    std::vector<OrderWitness> steiner_witnesses;
    OrderWitness strong_witness;

    std::vector<AxiomFailure> failures;
    Classification classification = Classification::structure_only;

    bool meets(Classification required) const;
};

std::string to_string(Classification c, bool subset_faces = true);

ValidationReport validate(const AdditiveParityStructure& b);
ValidationReport validate(const ParityStructure& c);

/** Cycle/topological-order decision for a relation on a set of generators. */
OrderWitness order_witness(const std::vector<GeneratorId>& nodes,
                           const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace paritykit

#endif  // PARITYKIT_PARITY_CORE_HPP
