#include <deque>
#include <tuple>

#include "paritykit/cells.hpp"

namespace paritykit {

ExpressionPtr AtomExpression::make_atom(GeneratorId x) {
    auto e = std::make_shared<AtomExpression>();
    e->kind = Kind::atom;
    e->generator = std::move(x);
    return e;
}

ExpressionPtr AtomExpression::make_identity(ExpressionPtr inner) {
    auto e = std::make_shared<AtomExpression>();
    e->kind = Kind::identity;
    e->left = std::move(inner);
    return e;
}

ExpressionPtr AtomExpression::make_compose(std::size_t k, ExpressionPtr left, ExpressionPtr right) {
    auto e = std::make_shared<AtomExpression>();
    e->kind = Kind::compose;
    e->k = k;
    e->left = std::move(left);
    e->right = std::move(right);
    return e;
}

std::ostream& operator<<(std::ostream& os, const AtomExpression& e) {
    switch (e.kind) {
        case AtomExpression::Kind::atom:
            return os << '<' << e.generator.name << '>';
        case AtomExpression::Kind::identity:
            return os << "id(" << *e.left << ')';
        case AtomExpression::Kind::compose:
            return os << '(' << *e.left << " #" << e.k << ' ' << *e.right << ')';
    }
    return os;
}

CellTable evaluate(const ParityStructure& c, const AtomExpression& e) {
    switch (e.kind) {
        case AtomExpression::Kind::atom:
            return atom(c, e.generator);
        case AtomExpression::Kind::identity:
            return identity(evaluate(c, *e.left));
        case AtomExpression::Kind::compose:
            return compose(evaluate(c, *e.left), evaluate(c, *e.right), e.k, ColumnSum::disjoint_subsets);
    }
    throw std::logic_error("unknown expression kind");
}

AtomClosure::AtomClosure(const ParityStructure& c, std::size_t max_dim) {
    if (!validate(c).weakly_loop_free) {
        throw std::invalid_argument("atom closure needs a weakly loop-free parity structure");
    }
    FreeDirectedComplex k = FreeDirectedComplex::from_structure(c.additive());

    // (dim, k, side, face) -> cells of that dimension with that k-face
    using Key = std::tuple<std::size_t, std::size_t, int, CellTable>;
    std::map<Key, std::vector<const CellTable*>> by_face;
    std::deque<const CellTable*> queue;

    auto insert = [&](CellTable t, ExpressionPtr e) {
        auto [it, fresh] = witnesses_.emplace(std::move(t), std::move(e));
        if (fresh) queue.push_back(&it->first);
    };

    for (const auto& x : c.all_generators()) {
        if (x.dim > max_dim) continue;
        CellTable a = atom(c, x);
        if (k.has_augmentation() && validate_cell(k, a, CellMode::nu).valid) insert(std::move(a), AtomExpression::make_atom(x));
    }

    while (!queue.empty()) {
        const CellTable* cell = queue.front();
        queue.pop_front();
        const ExpressionPtr expr = witnesses_.at(*cell);
        const std::size_t n = cell->dim();

        if (n < max_dim) insert(identity(*cell), AtomExpression::make_identity(expr));

        for (std::size_t j = 0; j < n; ++j) {
            CellTable src = face(*cell, j, Side::source);
            CellTable tgt = face(*cell, j, Side::target);
            by_face[{n, j, 0, src}].push_back(cell);
            by_face[{n, j, 1, tgt}].push_back(cell);

            // cell ∘ⱼ y for every known y with s_j y = t_j cell
            if (auto it = by_face.find({n, j, 0, tgt}); it != by_face.end()) {
                auto partners = it->second;
                for (const CellTable* y : partners) {
                    insert(compose(*cell, *y, j, ColumnSum::disjoint_subsets),
                           AtomExpression::make_compose(j, expr, witnesses_.at(*y)));
                }
            }
            // y ∘ⱼ cell for every known y with t_j y = s_j cell
            if (auto it = by_face.find({n, j, 1, src}); it != by_face.end()) {
                auto partners = it->second;
                for (const CellTable* y : partners) {
                    if (y == cell) continue;  // already covered above
                    insert(compose(*y, *cell, j, ColumnSum::disjoint_subsets),
                           AtomExpression::make_compose(j, witnesses_.at(*y), expr));
                }
            }
        }
    }
}

std::optional<ExpressionPtr> AtomClosure::find(const CellTable& t) const {
    auto it = witnesses_.find(t);
    if (it == witnesses_.end()) return std::nullopt;
    return it->second;
}

std::optional<ExpressionPtr> generated_by_atoms(const ParityStructure& c, const CellTable& t) {
    AtomClosure closure(c, t.dim());
    return closure.find(t);
}

}  // namespace paritykit
