#include <algorithm>
#include <queue>
#include <sstream>

#include "paritykit/parity_core.hpp"

namespace paritykit {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

std::string describe(const Multiset& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

std::string cycle_text(const std::vector<GeneratorId>& cycle) {
    std::string out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += " -> ";
        out += cycle[i].name;
    }
    return out;
}

/** Positions of the generators in canonical order, for all-of-B digraphs. */
struct GlobalIndex {
    std::vector<GeneratorId> nodes;
    std::vector<std::size_t> offset;

    explicit GlobalIndex(const AdditiveParityStructure& b) : nodes(b.all_generators()) {
        offset.resize(b.dimension_count() + 1, 0);
        for (std::size_t d = 0; d < b.dimension_count(); ++d) offset[d + 1] = offset[d] + b.generators(d).size();
    }

    std::size_t at(const AdditiveParityStructure& b, std::size_t dim, const std::string& name) const {
        return offset[dim] + b.index_of(dim, name);
    }
};

/** Edges i -> j whenever columns[i].out meets columns[j].in, i != j. */
std::vector<Edge> meeting_edges(const std::vector<const Multiset*>& out_cols,
                                const std::vector<const Multiset*>& in_cols) {
    // member name -> indices whose in-column contains it
    std::map<std::string, std::vector<std::size_t>> by_member;
    for (std::size_t j = 0; j < in_cols.size(); ++j) {
        if (!in_cols[j]) continue;
        for (const auto& [name, _] : *in_cols[j]) by_member[name].push_back(j);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out_cols.size(); ++i) {
        if (!out_cols[i]) continue;
        for (const auto& [name, _] : *out_cols[i]) {
            auto it = by_member.find(name);
            if (it == by_member.end()) continue;
            for (std::size_t j : it->second) {
                if (i != j) edges.emplace_back(i, j);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

OrderWitness order_witness(const std::vector<GeneratorId>& nodes, const std::vector<Edge>& edges) {
    const std::size_t n = nodes.size();
    std::vector<std::vector<std::size_t>> succ(n), pred(n);
    std::vector<std::size_t> indegree(n, 0);
    for (auto [from, to] : edges) {
        if (from == to) continue;  // partial orders are reflexive
        succ[from].push_back(to);
        pred[to].push_back(from);
        ++indegree[to];
    }

    OrderWitness w;
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i) {
        if (indegree[i] == 0) ready.push(i);
    }
    std::vector<bool> done(n, false);
    while (!ready.empty()) {
        std::size_t i = ready.top();
        ready.pop();
        done[i] = true;
        w.order.push_back(nodes[i]);
        for (std::size_t j : succ[i]) {
            if (--indegree[j] == 0) ready.push(j);
        }
    }
    if (w.order.size() == n) return w;

    // Every node left over has a predecessor that is also left over; walking
    // backwards must revisit a node.
    w.acyclic = false;
    w.order.clear();
    std::size_t start = 0;
    while (done[start]) ++start;
    std::vector<std::size_t> walk{start};
    std::vector<std::size_t> position(n, n);
    position[start] = 0;
    while (true) {
        std::size_t cur = walk.back();
        std::size_t next = n;
        for (std::size_t p : pred[cur]) {
            if (!done[p]) next = std::min(next, p);
        }
        if (position[next] != n) {
            std::vector<std::size_t> loop(walk.begin() + static_cast<std::ptrdiff_t>(position[next]), walk.end());
            std::reverse(loop.begin(), loop.end());
            // rotate so the smallest node leads, then close the walk
            auto smallest = std::min_element(loop.begin(), loop.end());
            std::rotate(loop.begin(), smallest, loop.end());
            for (std::size_t i : loop) w.cycle.push_back(nodes[i]);
            w.cycle.push_back(nodes[loop.front()]);
            return w;
        }
        position[next] = walk.size();
        walk.push_back(next);
    }
}

bool ValidationReport::meets(Classification required) const {
    return static_cast<int>(classification) >= static_cast<int>(required);
}

std::string to_string(Classification c, bool subset_faces) {
    switch (c) {
        case Classification::structure_only:
            return subset_faces ? "parity structure only" : "additive parity structure only";
        case Classification::additive_parity_complex:
            return "additive parity complex";
        case Classification::weak_parity_complex:
            return "weak parity complex";
        case Classification::parity_complex:
            return "parity complex";
    }
    return "unknown";
}

ValidationReport validate(const ParityStructure& c) { return validate(c.additive()); }

ValidationReport validate(const AdditiveParityStructure& b) {
    ValidationReport r;
    r.subset_faces = b.is_subset_structure();
    const std::size_t dims = b.dimension_count();

    // Globularity in multiset form: ∂⁻∂⁻x = ∂⁻∂⁺x and ∂⁺∂⁻x = ∂⁺∂⁺x.
    for (std::size_t d = 2; d < dims; ++d) {
        for (const auto& name : b.generators(d)) {
            const Faces& f = b.faces(d, name);
            FaceImages lo = face_images(b, d - 1, f.neg);
            FaceImages hi = face_images(b, d - 1, f.pos);
            if (lo.neg != hi.neg || lo.pos != hi.pos) {
                r.globular = false;
                r.failures.push_back({"globular", {{name, d}},
                                      "d-d-x = " + describe(lo.neg) + " vs d-d+x = " + describe(hi.neg) +
                                          "; d+d-x = " + describe(lo.pos) + " vs d+d+x = " + describe(hi.pos)});
            }
        }
    }

    // Normality: faces of 1-dimensional generators are singletons.
    for (const auto& name : b.generators(1)) {
        const Faces& f = b.faces(1, name);
        if (f.neg.total() != 1 || f.pos.total() != 1) {
            r.normal = false;
            r.failures.push_back({"normal", {{name, 1}},
                                  "faces " + describe(f.neg) + " / " + describe(f.pos) + " are not singletons"});
        }
    }

    std::optional<ParityStructure> parity;
    if (r.subset_faces) parity = ParityStructure::from_additive(b);

    // Subset-form globularity, under the hypothesis that every x± is well-formed.
    if (parity) {
        bool faces_well_formed = true;
        for (std::size_t d = 1; d < dims && faces_well_formed; ++d) {
            for (const auto& name : b.generators(d)) {
                const Faces& f = b.faces(d, name);
                if (!is_well_formed(*parity, d - 1, f.neg) || !is_well_formed(*parity, d - 1, f.pos)) {
                    faces_well_formed = false;
                    break;
                }
            }
        }
        if (faces_well_formed) {
            bool glob = true;
            for (std::size_t d = 2; d < dims; ++d) {
                for (const auto& name : b.generators(d)) {
                    const Faces& f = b.faces(d, name);
                    SubsetFaces lo = subset_faces(*parity, d - 1, f.neg);
                    SubsetFaces hi = subset_faces(*parity, d - 1, f.pos);
                    if (lo.neg != hi.neg || lo.pos != hi.pos) glob = false;
                }
            }
            r.globular_subset = glob;
            if (glob != r.globular) {
                r.failures.push_back({"globprop", {}, "subset and multiset globularity disagree"});
            }
        }
    }

    // Unitality, parity form: every μ(x)_k and π(x)_k is well-formed.
    if (parity) {
        bool unital = true;
        for (const auto& x : b.all_generators()) {
            AtomColumns cols = mu_pi(*parity, x);
            for (std::size_t k = 0; k <= x.dim; ++k) {
                if (!is_well_formed(*parity, k, cols.mu[k]) || !is_well_formed(*parity, k, cols.pi[k])) {
                    unital = false;
                    r.failures.push_back({"unital", {x},
                                          "mu/pi column " + std::to_string(k) + " not well-formed: " +
                                              describe(cols.mu[k]) + " / " + describe(cols.pi[k])});
                    break;
                }
            }
        }
        r.unital_parity = unital;
    }

    // Unitality, chain form: ε((∂∓)ⁿx) = 1 with the canonical augmentation.
    std::vector<AtomColumns> atoms;
    atoms.reserve(b.size());
    for (const auto& x : b.all_generators()) atoms.push_back(iterated_faces(b, x));
    r.unital_chain = r.normal;
    if (r.normal) {
        auto all = b.all_generators();
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (atoms[i].mu[0].total() != 1 || atoms[i].pi[0].total() != 1) {
                r.unital_chain = false;
                if (!parity) {
                    r.failures.push_back({"unital", {all[i]},
                                          "iterated faces end in " + describe(atoms[i].mu[0]) + " / " +
                                              describe(atoms[i].pi[0])});
                }
            }
        }
    } else if (!parity) {
        r.failures.push_back({"unital", {}, "no canonical augmentation: structure is not normal"});
    }
    r.unital = parity ? *r.unital_parity : r.unital_chain;

    // Weak loop-freeness: per dimension n >= 1, x -> y when ∂⁺x ∧ ∂⁻y ≠ 0.
    for (std::size_t d = 1; d < dims; ++d) {
        const auto& names = b.generators(d);
        std::vector<GeneratorId> nodes;
        std::vector<const Multiset*> outs, ins;
        for (const auto& name : names) {
            nodes.push_back({name, d});
            outs.push_back(&b.faces(d, name).pos);
            ins.push_back(&b.faces(d, name).neg);
        }
        OrderWitness w = order_witness(nodes, meeting_edges(outs, ins));
        if (!w.acyclic) {
            r.weakly_loop_free = false;
            r.failures.push_back({"weakly_loop_free", w.cycle, "cycle " + cycle_text(w.cycle)});
        }
        r.weak_witnesses.push_back(std::move(w));
    }

    // Steiner loop-freeness: per level n, on all of B, x -> y when <x>ₙ⁺ ∧ <y>ₙ⁻ ≠ 0.
    GlobalIndex global(b);
    for (std::size_t level = 0; level < dims; ++level) {
        std::vector<const Multiset*> outs(global.nodes.size(), nullptr), ins(global.nodes.size(), nullptr);
        for (std::size_t i = 0; i < global.nodes.size(); ++i) {
            if (global.nodes[i].dim < level) continue;
            outs[i] = &atoms[i].pi[level];
            ins[i] = &atoms[i].mu[level];
        }
        OrderWitness w = order_witness(global.nodes, meeting_edges(outs, ins));
        if (!w.acyclic) {
            r.steiner_loop_free = false;
            r.failures.push_back({"steiner_loop_free", w.cycle,
                                  "level " + std::to_string(level) + " cycle " + cycle_text(w.cycle)});
        }
        r.steiner_witnesses.push_back(std::move(w));
    }

    // Strong loop-freeness: x -> y when x ∈ ∂⁻y or y ∈ ∂⁺x.
    {
        std::vector<Edge> edges;
        for (std::size_t d = 1; d < dims; ++d) {
            for (const auto& name : b.generators(d)) {
                std::size_t self = global.at(b, d, name);
                const Faces& f = b.faces(d, name);
                for (const auto& [face, _] : f.neg) edges.emplace_back(global.at(b, d - 1, face), self);
                for (const auto& [face, _] : f.pos) edges.emplace_back(self, global.at(b, d - 1, face));
            }
        }
        r.strong_witness = order_witness(global.nodes, edges);
        if (!r.strong_witness.acyclic) {
            r.strongly_loop_free = false;
            r.failures.push_back(
                {"strongly_loop_free", r.strong_witness.cycle, "cycle " + cycle_text(r.strong_witness.cycle)});
        }
    }

    if (r.globular) {
        r.classification = Classification::additive_parity_complex;
        bool weak = parity && r.globular_subset.value_or(false) && r.unital_parity.value_or(false) &&
                    r.weakly_loop_free;
        if (weak) {
            r.classification = r.strongly_loop_free ? Classification::parity_complex
                                                    : Classification::weak_parity_complex;
        }
    }
    return r;
}

}  // namespace paritykit
