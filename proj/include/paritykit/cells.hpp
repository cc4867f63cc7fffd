/**
 * Cell tables of ρK, νK and 𝒪C.
 *
 * An n-cell is a double row of chains (M₀..Mₙ; P₀..Pₙ) with Mₙ = Pₙ and
 * ∂(row_{k+1}) = Pₖ - Mₖ for both rows. Sources, targets, composites and
 * identities are computed columnwise; they do not consult the complex.
 */

#ifndef PARITYKIT_CELLS_HPP
#define PARITYKIT_CELLS_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "paritykit/chain.hpp"
#include "paritykit/multiset.hpp"
#include "paritykit/parity_core.hpp"

namespace paritykit {

struct CellTable {
    std::vector<Multiset> neg;
    std::vector<Multiset> pos;

    /** Sets column dimensions; throws when the rows differ in length or are empty. */
    static CellTable make(std::vector<Multiset> neg, std::vector<Multiset> pos);

    std::size_t dim() const { return neg.size() - 1; }
    const Multiset& top() const { return neg.back(); }

    bool operator==(const CellTable&) const = default;
    std::strong_ordering operator<=>(const CellTable& other) const;
};

std::ostream& operator<<(std::ostream& os, const CellTable& t);

/** Raised when an operation that the theory guarantees cannot fail does. */
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class CellMode { rho, nu };

struct CellCheck {
    bool valid = true;
    std::string reason;
};

/** Throws UnknownGenerator, or std::logic_error for mode nu without augmentation. */
CellCheck validate_cell(const FreeDirectedComplex& k, const CellTable& t, CellMode mode);

enum class Side { source, target };

/** k-source or k-target; requires k < dim. */
CellTable face(const CellTable& t, std::size_t k, Side side);

/** face(x, k, target) == face(y, k, source) with equal dimensions above k. */
bool composable(const CellTable& x, const CellTable& y, std::size_t k);

enum class ColumnSum {
    /** Columns above k are added as multisets (ρK). */
    add,
    /** Columns above k must be disjoint subsets (𝒪C); overlap is an InternalInconsistency. */
    disjoint_subsets,
};

/** x ∘ₖ y; throws std::invalid_argument when not composable. */
CellTable compose(const CellTable& x, const CellTable& y, std::size_t k, ColumnSum sum = ColumnSum::add);

/** Identity (n+1)-cell: columns of t followed by (∅, ∅). */
CellTable identity(const CellTable& t);

/** Repeated identity up to dimension n >= dim(t). */
CellTable lift_identity(CellTable t, std::size_t n);

/** The atom (μ(x), π(x)). */
CellTable atom(const ParityStructure& c, const GeneratorId& x);

/** The atom built from iterated boundary parts. */
CellTable chain_atom(const FreeDirectedComplex& k, const GeneratorId& x);

/** Cap on enumeration output, read from PARITYKIT_MAX_CELLS (default 10⁶). */
std::size_t max_cells_from_env();

class EnumerationLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/**
 * All 𝒪C cells of dimension <= max_dim in canonical order.
 *
 * Columns are generated top-down from every well-formed top; the common
 * part of each column pair is searched with backtracking and pruned by the
 * disjointness Mₖ ∧ ∂⁺b = Pₖ ∧ ∂⁻b = 0 for b in column k+1. Tops are
 * distributed over OpenMP threads. Requires C weakly loop-free
 * (std::invalid_argument otherwise).
 */
std::vector<CellTable> enumerate_cells(const ParityStructure& c, std::size_t max_dim,
                                       std::size_t max_cells = max_cells_from_env());

/**
 * Serial reference for enumerate_cells: same top-down scheme, but the common
 * part ranges over every subset of the admissible pool and no disjointness
 * pruning is applied.
 */
std::vector<CellTable> enumerate_cells_serial(const ParityStructure& c, std::size_t max_dim,
                                              std::size_t max_cells = max_cells_from_env());

/**
 * Splits an n-cell (n >= 1) into cells with single-generator tops whose
 * left-to-right (n-1)-composite is t. Returns an empty list for identities.
 */
std::vector<CellTable> excision_decompose(const FreeDirectedComplex& k, const CellTable& t);

/** Binary tree of atoms, identities and composites. */
struct AtomExpression {
    enum class Kind { atom, identity, compose };

    Kind kind = Kind::atom;
    GeneratorId generator;
    std::size_t k = 0;
    std::shared_ptr<const AtomExpression> left;
    std::shared_ptr<const AtomExpression> right;

    static std::shared_ptr<const AtomExpression> make_atom(GeneratorId x);
    static std::shared_ptr<const AtomExpression> make_identity(std::shared_ptr<const AtomExpression> inner);
    static std::shared_ptr<const AtomExpression> make_compose(std::size_t k,
                                                              std::shared_ptr<const AtomExpression> left,
                                                              std::shared_ptr<const AtomExpression> right);
};

using ExpressionPtr = std::shared_ptr<const AtomExpression>;

std::ostream& operator<<(std::ostream& os, const AtomExpression& e);

CellTable evaluate(const ParityStructure& c, const AtomExpression& e);

/**
 * Breadth-first closure of the atoms of C (dimension <= max_dim) under
 * identities and all composites, with a witness expression per cell.
 */
class AtomClosure {
public:
    AtomClosure(const ParityStructure& c, std::size_t max_dim);

    std::optional<ExpressionPtr> find(const CellTable& t) const;
    std::size_t size() const { return witnesses_.size(); }
    const std::map<CellTable, ExpressionPtr>& witnesses() const { return witnesses_; }

private:
    std::map<CellTable, ExpressionPtr> witnesses_;
};

/** Witness expression for t, or nothing when t is outside the closure. */
std::optional<ExpressionPtr> generated_by_atoms(const ParityStructure& c, const CellTable& t);

}  // namespace paritykit

#endif  // PARITYKIT_CELLS_HPP
