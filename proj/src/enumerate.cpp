#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "paritykit/cells.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace paritykit {

namespace {

using Subset = std::vector<std::uint32_t>;

/** Index-based view of a parity structure: faces as sorted index lists. */
struct Indexed {
    struct Layer {
        std::vector<std::string> names;
        std::vector<Subset> neg;
        std::vector<Subset> pos;
    };
    std::vector<Layer> layers;

    explicit Indexed(const ParityStructure& c) {
        layers.resize(c.dimension_count());
        for (std::size_t d = 0; d < layers.size(); ++d) {
            Layer& l = layers[d];
            l.names = c.generators(d);
            l.neg.resize(l.names.size());
            l.pos.resize(l.names.size());
            if (d == 0) continue;
            for (std::size_t i = 0; i < l.names.size(); ++i) {
                const Faces& f = c.faces(d, l.names[i]);
                for (const auto& [name, _] : f.neg) {
                    l.neg[i].push_back(static_cast<std::uint32_t>(c.additive().index_of(d - 1, name)));
                }
                for (const auto& [name, _] : f.pos) {
                    l.pos[i].push_back(static_cast<std::uint32_t>(c.additive().index_of(d - 1, name)));
                }
            }
        }
    }

    std::size_t size(std::size_t d) const { return layers[d].names.size(); }

    Multiset to_multiset(std::size_t d, const Subset& s) const {
        Multiset m(d);
        for (auto i : s) m.add(layers[d].names[i]);
        return m;
    }
};

/** Marks of face members already used by a growing subset. */
struct FaceMarks {
    std::vector<char> neg;
    std::vector<char> pos;

    explicit FaceMarks(std::size_t n) : neg(n, 0), pos(n, 0) {}

    bool admits(const Indexed::Layer& l, std::uint32_t e) const {
        for (auto f : l.neg[e]) {
            if (neg[f]) return false;
        }
        for (auto f : l.pos[e]) {
            if (pos[f]) return false;
        }
        return true;
    }
    void set(const Indexed::Layer& l, std::uint32_t e, char v) {
        for (auto f : l.neg[e]) neg[f] = v;
        for (auto f : l.pos[e]) pos[f] = v;
    }
};

bool well_formed(const Indexed& s, std::size_t d, const Subset& set) {
    if (d == 0) return set.size() == 1;
    FaceMarks marks(s.size(d - 1));
    for (auto e : set) {
        if (!marks.admits(s.layers[d], e)) return false;
        marks.set(s.layers[d], e, 1);
    }
    return true;
}

/** (S∓, S±) of a subset S of dimension d >= 1. */
std::pair<Subset, Subset> moved_faces(const Indexed& s, std::size_t d, const Subset& set) {
    std::vector<char> in_neg(s.size(d - 1), 0), in_pos(s.size(d - 1), 0);
    for (auto e : set) {
        for (auto f : s.layers[d].neg[e]) in_neg[f] = 1;
        for (auto f : s.layers[d].pos[e]) in_pos[f] = 1;
    }
    Subset mp, pm;
    for (std::uint32_t i = 0; i < in_neg.size(); ++i) {
        if (in_neg[i] && !in_pos[i]) mp.push_back(i);
        if (in_pos[i] && !in_neg[i]) pm.push_back(i);
    }
    return {std::move(mp), std::move(pm)};
}

Subset merged(const Subset& a, const Subset& b) {
    Subset out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct Columns {
    std::vector<Subset> neg;
    std::vector<Subset> pos;
};

/** Common search state for one top. */
class TopDownSearch {
public:
    TopDownSearch(const Indexed& s, bool prune, std::vector<CellTable>& out, std::atomic<std::size_t>& produced,
                  std::size_t cap)
        : s_(s), prune_(prune), out_(out), produced_(produced), cap_(cap) {}

    void run(std::size_t n, const Subset& top) {
        cols_.neg.assign(n + 1, {});
        cols_.pos.assign(n + 1, {});
        cols_.neg[n] = top;
        cols_.pos[n] = top;
        fill(n);
    }

private:
    void emit() {
        if (produced_.fetch_add(1) >= cap_) return;
        std::vector<Multiset> neg, pos;
        for (std::size_t d = 0; d < cols_.neg.size(); ++d) {
            neg.push_back(s_.to_multiset(d, cols_.neg[d]));
            pos.push_back(s_.to_multiset(d, cols_.pos[d]));
        }
        out_.push_back(CellTable::make(std::move(neg), std::move(pos)));
    }

    void fill(std::size_t k) {
        if (produced_.load() > cap_) return;
        if (k == 0) {
            emit();
            return;
        }
        const Subset& m = cols_.neg[k];
        const Subset& p = cols_.pos[k];
        auto [a, b] = moved_faces(s_, k, m);
        if (moved_faces(s_, k, p) != std::pair{a, b}) return;

        const std::size_t below = k - 1;
        std::vector<char> excluded(s_.size(below), 0);
        for (auto i : a) excluded[i] = 1;
        for (auto i : b) excluded[i] = 1;
        if (prune_) {
            // Mₖ₋₁ ∧ ∂⁺b = 0 and Pₖ₋₁ ∧ ∂⁻b = 0 for every b in column k.
            std::vector<char> plus(s_.size(below), 0), minus(s_.size(below), 0);
            for (const Subset* row : {&m, &p}) {
                for (auto e : *row) {
                    for (auto f : s_.layers[k].pos[e]) plus[f] = 1;
                    for (auto f : s_.layers[k].neg[e]) minus[f] = 1;
                }
            }
            if (std::any_of(a.begin(), a.end(), [&](auto i) { return plus[i]; }) ||
                std::any_of(b.begin(), b.end(), [&](auto i) { return minus[i]; })) {
                return;
            }
            for (std::size_t i = 0; i < excluded.size(); ++i) excluded[i] |= plus[i] | minus[i];
        }
        Subset pool;
        for (std::uint32_t i = 0; i < excluded.size(); ++i) {
            if (!excluded[i]) pool.push_back(i);
        }

        if (below == 0) {
            if (a.size() == 1 && b.size() == 1) {
                descend(k, a, b);
            } else if (a.empty() && b.empty()) {
                for (auto i : pool) descend(k, {i}, {i});
            }
            return;
        }

        if (prune_) {
            if (!well_formed(s_, below, a) || !well_formed(s_, below, b)) return;
            FaceMarks mm(s_.size(below - 1)), pm(s_.size(below - 1));
            for (auto e : a) mm.set(s_.layers[below], e, 1);
            for (auto e : b) pm.set(s_.layers[below], e, 1);
            Subset common;
            grow(k, a, b, pool, 0, common, mm, pm);
            return;
        }

        if (pool.size() > 25) throw EnumerationLimitExceeded("candidate pool too large for the serial reference");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
            Subset common;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (mask >> i & 1U) common.push_back(pool[i]);
            }
            Subset lo_m = merged(a, common), lo_p = merged(b, common);
            if (well_formed(s_, below, lo_m) && well_formed(s_, below, lo_p)) descend(k, lo_m, lo_p);
        }
    }

    /** Backtracking over common parts; well-formedness is hereditary so rejected prefixes are final. */
    void grow(std::size_t k, const Subset& a, const Subset& b, const Subset& pool, std::size_t from, Subset& common,
              FaceMarks& mm, FaceMarks& pm) {
        descend(k, merged(a, common), merged(b, common));
        const auto& layer = s_.layers[k - 1];
        for (std::size_t i = from; i < pool.size(); ++i) {
            auto e = pool[i];
            if (!mm.admits(layer, e) || !pm.admits(layer, e)) continue;
            mm.set(layer, e, 1);
            pm.set(layer, e, 1);
            common.push_back(e);
            grow(k, a, b, pool, i + 1, common, mm, pm);
            common.pop_back();
            mm.set(layer, e, 0);
            pm.set(layer, e, 0);
        }
    }

    void descend(std::size_t k, Subset lo_m, Subset lo_p) {
        Subset saved_m = std::move(cols_.neg[k - 1]);
        Subset saved_p = std::move(cols_.pos[k - 1]);
        cols_.neg[k - 1] = std::move(lo_m);
        cols_.pos[k - 1] = std::move(lo_p);
        fill(k - 1);
        cols_.neg[k - 1] = std::move(saved_m);
        cols_.pos[k - 1] = std::move(saved_p);
    }

    const Indexed& s_;
    bool prune_;
    std::vector<CellTable>& out_;
    std::atomic<std::size_t>& produced_;
    std::size_t cap_;
    Columns cols_;
};

/** Every well-formed subset of dimension d (singletons when d = 0). */
void well_formed_subsets(const Indexed& s, std::size_t d, std::vector<Subset>& out) {
    if (d == 0) {
        for (std::uint32_t i = 0; i < s.size(0); ++i) out.push_back({i});
        return;
    }
    FaceMarks marks(s.size(d - 1));
    Subset current;
    auto rec = [&](auto&& self, std::uint32_t from) -> void {
        out.push_back(current);
        for (std::uint32_t e = from; e < s.size(d); ++e) {
            if (!marks.admits(s.layers[d], e)) continue;
            marks.set(s.layers[d], e, 1);
            current.push_back(e);
            self(self, e + 1);
            current.pop_back();
            marks.set(s.layers[d], e, 0);
        }
    };
    rec(rec, 0);
}

struct Task {
    std::size_t dim;
    Subset top;
};

std::vector<Task> tasks_for(const Indexed& s, std::size_t max_dim) {
    std::vector<Task> tasks;
    for (std::size_t n = 0; n <= max_dim; ++n) {
        std::vector<Subset> tops;
        well_formed_subsets(s, n, tops);
        for (auto& t : tops) tasks.push_back({n, std::move(t)});
    }
    return tasks;
}

void require_weakly_loop_free(const ParityStructure& c) {
    if (!validate(c).weakly_loop_free) {
        throw std::invalid_argument("cell enumeration needs a weakly loop-free parity structure");
    }
}

[[noreturn]] void over_cap(std::size_t cap) {
    throw EnumerationLimitExceeded("cell enumeration exceeded the cap of " + std::to_string(cap) + " tables");
}

/**
 * Merges per-task output and appends the identity liftings that fill the
 * dimensions between the structure's top dimension and max_dim.
 */
std::vector<CellTable> finish(std::vector<std::vector<CellTable>>& per_task, std::size_t produced,
                              std::size_t top_dim, std::size_t max_dim, std::size_t cap) {
    if (produced > cap) over_cap(cap);
    std::vector<CellTable> all;
    for (auto& v : per_task) {
        for (auto& t : v) all.push_back(std::move(t));
    }
    const std::size_t base = all.size();
    for (std::size_t n = top_dim + 1; n <= max_dim; ++n) {
        for (std::size_t i = 0; i < base; ++i) {
            if (all[i].dim() != top_dim) continue;
            if (all.size() >= cap) over_cap(cap);
            all.push_back(lift_identity(all[i], n));
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

std::size_t max_cells_from_env() {
    if (const char* env = std::getenv("PARITYKIT_MAX_CELLS")) {
        try {
            auto v = std::stoull(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 1000000;
}

std::vector<CellTable> enumerate_cells(const ParityStructure& c, std::size_t max_dim, std::size_t max_cells) {
    require_weakly_loop_free(c);
    if (c.size() == 0) return {};
    Indexed s(c);
    std::vector<Task> tasks = tasks_for(s, std::min(max_dim, s.layers.size() - 1));
    std::vector<std::vector<CellTable>> per_task(tasks.size());
    std::atomic<std::size_t> produced{0};
    std::vector<std::string> errors(tasks.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tasks.size()); ++i) {
        try {
            TopDownSearch search(s, true, per_task[i], produced, max_cells);
            search.run(tasks[i].dim, tasks[i].top);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors) {
        if (!e.empty()) throw InternalInconsistency(e);
    }
    return finish(per_task, produced.load(), s.layers.size() - 1, max_dim, max_cells);
}

std::vector<CellTable> enumerate_cells_serial(const ParityStructure& c, std::size_t max_dim, std::size_t max_cells) {
    require_weakly_loop_free(c);
    if (c.size() == 0) return {};
    Indexed s(c);
    std::vector<Task> tasks = tasks_for(s, std::min(max_dim, s.layers.size() - 1));
    std::vector<std::vector<CellTable>> per_task(tasks.size());
    std::atomic<std::size_t> produced{0};
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        TopDownSearch search(s, false, per_task[i], produced, max_cells);
        search.run(tasks[i].dim, tasks[i].top);
    }
    return finish(per_task, produced.load(), s.layers.size() - 1, max_dim, max_cells);
}

}  // namespace paritykit
