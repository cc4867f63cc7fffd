// Seeded random structures for property tests.

#ifndef PARITYKIT_TESTS_RANDOM_STRUCTURES_HPP
#define PARITYKIT_TESTS_RANDOM_STRUCTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "paritykit/chain.hpp"
#include "paritykit/parity_core.hpp"

namespace paritykit::testing {

struct RandomOptions {
    std::size_t max_generators = 12;
    std::size_t max_dims = 3;
    Count max_count = 2;
    double face_probability = 0.3;
    // 1-generators get exactly one source and one target vertex
    bool normal_edges = false;
    // higher generators are drawn as pairs of chains with equal boundary half the time
    bool globular_bias = false;
};

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline Multiset random_chain(std::mt19937_64& rng, const std::vector<std::string>& pool, std::size_t dim,
                             const RandomOptions& opt, const Multiset& avoid) {
    Multiset out(dim);
    for (const auto& name : pool) {
        if (avoid.contains(name) || !chance(rng, opt.face_probability)) continue;
        out.add(name, static_cast<Count>(uniform(rng, 1, static_cast<std::size_t>(opt.max_count))));
    }
    return out;
}

inline AdditiveParityStructure random_structure(std::mt19937_64& rng, const RandomOptions& opt) {
    const std::size_t dims = uniform(rng, 1, opt.max_dims);
    const std::size_t total = uniform(rng, dims, opt.max_generators);
    std::vector<std::size_t> per_dim(dims, 1);
    for (std::size_t i = dims; i < total; ++i) ++per_dim[uniform(rng, 0, dims - 1)];

    std::vector<Element> out;
    std::vector<std::vector<std::string>> names(dims);
    for (std::size_t n = 0; n < dims; ++n) {
        for (std::size_t i = 0; i < per_dim[n]; ++i) names[n].push_back(std::string(1, static_cast<char>('a' + n)) + std::to_string(i));
    }
    AdditiveParityStructure partial;
    for (std::size_t n = 0; n < dims; ++n) {
        FreeDirectedComplex k = FreeDirectedComplex::from_structure(partial);
        for (const auto& name : names[n]) {
            Element e{name, n, Multiset(n ? n - 1 : 0), Multiset(n ? n - 1 : 0)};
            if (n == 1 && opt.normal_edges && names[0].size() >= 2) {
                std::size_t s = uniform(rng, 0, names[0].size() - 1);
                std::size_t t = uniform(rng, 0, names[0].size() - 2);
                if (t >= s) ++t;
                e.neg.add(names[0][s]);
                e.pos.add(names[0][t]);
            } else if (n >= 2 && opt.globular_bias && chance(rng, 0.5)) {
                e.neg = random_chain(rng, names[n - 1], n - 1, opt, Multiset());
                SignedVector want = k.boundary(n - 1, SignedVector::from(e.neg));
                for (int attempt = 0; attempt < 40; ++attempt) {
                    Multiset cand = random_chain(rng, names[n - 1], n - 1, opt, e.neg);
                    if (k.boundary(n - 1, SignedVector::from(cand)) == want) {
                        e.pos = cand;
                        break;
                    }
                }
            } else if (n > 0) {
                e.neg = random_chain(rng, names[n - 1], n - 1, opt, Multiset());
                e.pos = random_chain(rng, names[n - 1], n - 1, opt, e.neg);
            }
            out.push_back(std::move(e));
        }
        partial = AdditiveParityStructure::from_elements(out);
    }
    return partial;
}

}  // namespace paritykit::testing

#endif
