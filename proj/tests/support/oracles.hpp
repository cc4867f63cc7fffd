// Independent reference computations used by unit and acceptance tests.

#ifndef PARITYKIT_TESTS_ORACLES_HPP
#define PARITYKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "paritykit/cells.hpp"
#include "paritykit/chain.hpp"
#include "paritykit/io.hpp"
#include "paritykit/morphisms.hpp"
#include "paritykit/parity_core.hpp"

#ifndef PARITYKIT_FIXTURES
#define PARITYKIT_FIXTURES "tests/fixtures"
#endif

namespace paritykit::testing {

inline std::string fixture_path(const std::string& name) { return std::string(PARITYKIT_FIXTURES) + "/" + name; }

inline AdditiveParityStructure load_additive(const std::string& name) {
    return structure_from_json(read_json(fixture_path(name)));
}

inline ParityStructure load_parity(const std::string& name) { return ParityStructure::from_additive(load_additive(name)); }

inline ParsedMorphism load_morphism(const std::string& name) { return morphism_from_json(read_json(fixture_path(name))); }

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <typename T>
std::string show(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Every multiset over `names` with counts in [0, max_count].
inline std::vector<Multiset> all_multisets(const std::vector<std::string>& names, std::size_t dim, Count max_count) {
    std::vector<Multiset> out;
    std::vector<Count> digits(names.size(), 0);
    while (true) {
        Multiset m(dim);
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (digits[i]) m.add(names[i], digits[i]);
        }
        out.push_back(std::move(m));
        std::size_t i = 0;
        while (i < digits.size() && digits[i] == max_count) digits[i++] = 0;
        if (i == digits.size()) break;
        ++digits[i];
    }
    return out;
}

/**
 * Cells of νK up to max_dim, built bottom-up: an n-cell is a pair of
 * (n-1)-cells agreeing below the top column plus a top X with
 * ∂X = target top - source top. Columns range over multisets with counts
 * up to max_count, so a cell with a repeated generator would show up here
 * while the subset-only enumerator could not produce it.
 */
inline std::vector<CellTable> brute_force_cells(const FreeDirectedComplex& k, std::size_t max_dim, Count max_count) {
    std::vector<CellTable> all;
    if (k.dimension_count() == 0) return all;
    std::vector<CellTable> layer;
    for (const auto& v : k.basis(0)) layer.push_back(CellTable::make({Multiset(0, {{v, 1}})}, {Multiset(0, {{v, 1}})}));
    all = layer;
    for (std::size_t n = 1; n <= max_dim; ++n) {
        std::map<std::string, std::vector<Multiset>> by_boundary;
        std::vector<std::string> names = n < k.dimension_count() ? k.basis(n) : std::vector<std::string>{};
        for (auto& x : all_multisets(names, n, max_count)) {
            by_boundary[show(names.empty() ? SignedVector(n - 1) : k.boundary(n, SignedVector::from(x)))].push_back(x);
        }
        // group (n-1)-cells by their columns below the top
        std::map<std::pair<std::vector<Multiset>, std::vector<Multiset>>, std::vector<const CellTable*>> groups;
        for (const auto& t : layer) {
            std::vector<Multiset> lo_n(t.neg.begin(), t.neg.end() - 1);
            std::vector<Multiset> lo_p(t.pos.begin(), t.pos.end() - 1);
            groups[{lo_n, lo_p}].push_back(&t);
        }
        std::vector<CellTable> next;
        for (const auto& [_, members] : groups) {
            for (const CellTable* s : members) {
                for (const CellTable* t : members) {
                    SignedVector want = SignedVector::difference(t->top(), s->top());
                    auto it = by_boundary.find(show(want));
                    if (it == by_boundary.end()) continue;
                    for (const auto& x : it->second) {
                        std::vector<Multiset> neg(s->neg.begin(), s->neg.end());
                        std::vector<Multiset> pos(s->pos.begin(), s->pos.end() - 1);
                        pos.push_back(t->top());
                        neg.push_back(x);
                        pos.push_back(x);
                        next.push_back(CellTable::make(std::move(neg), std::move(pos)));
                    }
                }
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

// All subsets of `names` (as multisets of the given dimension) for which keep() holds.
inline std::vector<Multiset> subsets_where(const std::vector<std::string>& names, std::size_t dim,
                                           const std::function<bool(const Multiset&)>& keep) {
    std::vector<Multiset> out;
    for (unsigned long mask = 0; mask < (1ul << names.size()); ++mask) {
        Multiset m(dim);
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (mask & (1ul << i)) m.add(names[i]);
        }
        if (keep(m)) out.push_back(std::move(m));
    }
    return out;
}

/**
 * Every weak-parity morphism from src to tgt, by backtracking over
 * generators in dimension order. Images are filtered with the definition
 * spelled out directly: well-formed image, and for n > 0 the two subset
 * equations S∓ = M \ P and S± = P \ M on unions of face images.
 */
inline std::vector<GradedMorphism> all_weak_parity_morphisms(std::shared_ptr<const AdditiveParityStructure> src,
                                                             std::shared_ptr<const AdditiveParityStructure> tgt,
                                                             std::size_t limit = 100000) {
    ParityStructure c = ParityStructure::from_additive(*tgt);
    std::vector<std::vector<Multiset>> well_formed;
    for (std::size_t n = 0; n < src->dimension_count(); ++n) {
        if (n >= tgt->dimension_count()) {
            well_formed.push_back(n == 0 ? std::vector<Multiset>{} : std::vector<Multiset>{Multiset(n)});
            continue;
        }
        well_formed.push_back(subsets_where(tgt->generators(n), n, [&](const Multiset& s) {
            return is_well_formed(c, n, s);
        }));
    }
    std::vector<GeneratorId> order = src->all_generators();
    Assignment current(src->dimension_count());
    std::vector<GradedMorphism> out;

    auto union_of = [&](std::size_t n, const Multiset& s) {
        Multiset u(n);
        for (const auto& [x, _] : s) u = join(u, current[n].at(x));
        u.set_dim(n);
        return u;
    };

    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (out.size() >= limit) return;
        if (i == order.size()) {
            out.emplace_back(src, tgt, current);
            return;
        }
        const GeneratorId& x = order[i];
        for (const auto& s : well_formed[x.dim]) {
            if (x.dim > 0) {
                const Faces& f = src->faces(x);
                Multiset m = union_of(x.dim - 1, f.neg);
                Multiset p = union_of(x.dim - 1, f.pos);
                SubsetFaces sf = s.empty() ? SubsetFaces{} : subset_faces(c, x.dim, s);
                if (sf.neg != difference(m, p) || sf.pos != difference(p, m)) continue;
            }
            current[x.dim][x.name] = s;
            go(i + 1);
            current[x.dim].erase(x.name);
        }
    };
    go(0);
    return out;
}

}  // namespace paritykit::testing

#endif
