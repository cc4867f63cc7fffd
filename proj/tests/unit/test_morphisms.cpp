#include <doctest.h>

#include "paritykit/generators.hpp"
#include "paritykit/morphisms.hpp"
#include "support/oracles.hpp"

using namespace paritykit;
using namespace paritykit::testing;

namespace {

using Ptr = std::shared_ptr<const AdditiveParityStructure>;

Ptr share(const ParityStructure& c) { return std::make_shared<const AdditiveParityStructure>(c.additive()); }

Multiset set(std::size_t dim, std::initializer_list<const char*> names) {
    Multiset m(dim);
    for (const char* n : names) m.add(n);
    return m;
}

GradedMorphism edge_to_path() {
    return GradedMorphism(share(globe(1)), share(oriental(2)),
                          {{{"e0-", set(0, {"0"})}, {"e0+", set(0, {"2"})}}, {{"top", set(1, {"01", "12"})}}});
}

GradedMorphism collapse() {
    return GradedMorphism(share(globe(1)), share(globe(0)),
                          {{{"e0-", set(0, {"top"})}, {"e0+", set(0, {"top"})}}, {{"top", Multiset(1)}}});
}

GradedMorphism inclusion(std::size_t from, std::size_t to) {
    Assignment a(from + 1);
    ParityStructure s = oriental(from);
    for (const auto& x : s.all_generators()) a[x.dim][x.name] = Multiset(x.dim, {{x.name, 1}});
    return GradedMorphism(share(s), share(oriental(to)), a);
}

}  // namespace

TEST_CASE("morphism construction checks totality and dimensions") {
    CHECK_THROWS_AS(GradedMorphism(share(globe(1)), share(oriental(2)), {{{"e0-", set(0, {"0"})}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GradedMorphism(share(globe(1)), share(oriental(2)),
                                   {{{"e0-", set(0, {"0"})}, {"e0+", set(0, {"9"})}}, {{"top", Multiset(1)}}}),
                    UnknownGenerator);
}

TEST_CASE("validation") {
    MorphismReport r = validate_morphism(edge_to_path(), MorphismMode::weak_parity);
    CHECK(r.valid);
    CHECK_FALSE(r.normal);
    CHECK(validate_morphism(edge_to_path(), MorphismMode::additive).valid);
    GradedMorphism id = GradedMorphism::identity(share(oriental(3)));
    CHECK(validate_morphism(id, MorphismMode::weak_parity).valid);
    CHECK(validate_morphism(id, MorphismMode::weak_parity).normal);
    CHECK(validate_morphism(collapse(), MorphismMode::weak_parity).valid);

    GradedMorphism wrong(share(globe(1)), share(oriental(2)),
                         {{{"e0-", set(0, {"0"})}, {"e0+", set(0, {"2"})}}, {{"top", set(1, {"01"})}}});
    MorphismReport bad = validate_morphism(wrong, MorphismMode::weak_parity);
    CHECK_FALSE(bad.valid);
    CHECK(bad.failures.size() == 1);

    GradedMorphism not_wf(share(globe(1)), share(oriental(2)),
                          {{{"e0-", set(0, {"0"})}, {"e0+", set(0, {"0"})}}, {{"top", set(1, {"01", "02"})}}});
    CHECK_FALSE(validate_morphism(not_wf, MorphismMode::weak_parity).valid);

    auto circle = std::make_shared<const AdditiveParityStructure>(load_additive("circle.json"));
    CHECK_THROWS_AS(validate_morphism(GradedMorphism::identity(circle), MorphismMode::weak_parity),
                    std::invalid_argument);
    CHECK(validate_morphism(GradedMorphism::identity(circle), MorphismMode::additive).valid);
}

TEST_CASE("strict movement") {
    CHECK(check_strict_movement(edge_to_path()));
    CHECK(check_strict_movement(GradedMorphism::identity(share(cube(2)))));
    CHECK(check_strict_movement(collapse()));
    GradedMorphism wrong(share(globe(1)), share(oriental(2)),
                         {{{"e0-", set(0, {"0"})}, {"e0+", set(0, {"2"})}}, {{"top", set(1, {"01"})}}});
    CHECK_THROWS_AS(check_strict_movement(wrong), std::invalid_argument);
}

TEST_CASE("composition") {
    GradedMorphism f = edge_to_path();
    CHECK(compose_morphisms(GradedMorphism::identity(f.source_ptr()), f, MorphismMode::weak_parity) == f);
    CHECK(compose_morphisms(f, GradedMorphism::identity(f.target_ptr()), MorphismMode::weak_parity) == f);
    GradedMorphism h = compose_morphisms(f, inclusion(2, 3), MorphismMode::weak_parity);
    CHECK(h.image(1, "top") == set(1, {"01", "12"}));
    CHECK(validate_morphism(h, MorphismMode::weak_parity).valid);
    CHECK_THROWS_AS(compose_morphisms(f, f, MorphismMode::weak_parity), std::invalid_argument);
}

TEST_CASE("composition is associative over enumerated morphisms") {
    Ptr g1 = share(globe(1));
    Ptr o2 = share(oriental(2));
    Ptr o3 = share(oriental(3));
    auto fs = all_weak_parity_morphisms(g1, o2);
    auto gs = all_weak_parity_morphisms(o2, o2);
    auto hs = all_weak_parity_morphisms(o2, o3);
    REQUIRE(!fs.empty());
    REQUIRE(!gs.empty());
    REQUIRE(!hs.empty());
    for (std::size_t i = 0; i < fs.size(); i += 3) {
        for (std::size_t j = 0; j < gs.size(); j += 2) {
            for (std::size_t l = 0; l < hs.size(); l += 5) {
                auto left = compose_morphisms(compose_morphisms(fs[i], gs[j], MorphismMode::weak_parity), hs[l],
                                              MorphismMode::weak_parity);
                auto right = compose_morphisms(fs[i], compose_morphisms(gs[j], hs[l], MorphismMode::weak_parity),
                                               MorphismMode::weak_parity);
                CHECK(left == right);
            }
        }
    }
}

TEST_CASE("weak-parity morphisms are normal additive morphisms with well-formed subset images") {
    Ptr g2 = share(globe(2));
    Ptr o3 = share(oriental(3));
    auto valid = all_weak_parity_morphisms(g2, o3);
    REQUIRE(!valid.empty());
    for (const auto& f : valid) {
        CHECK(validate_morphism(f, MorphismMode::weak_parity).valid);
        CHECK(validate_morphism(f, MorphismMode::additive).valid);
        CHECK(check_strict_movement(f));
    }
    // converse: additive morphisms whose images are well-formed subsets are weak-parity morphisms
    Ptr o2 = share(oriental(2));
    ParityStructure small = oriental(2);
    auto all_images = [&](std::size_t n) {
        return subsets_where(o2->generators(n), n, [&](const Multiset& s) { return is_well_formed(small, n, s); });
    };
    auto v0 = all_images(0);
    auto v1 = all_images(1);
    auto v2 = all_images(2);
    std::size_t additive_valid = 0;
    for (const auto& a : v0) {
        for (const auto& b : v0) {
            for (const auto& lo : v1) {
                for (const auto& hi : v1) {
                    for (const auto& top : v2) {
                        GradedMorphism f(g2, o2, {{{"e0-", a}, {"e0+", b}}, {{"e1-", lo}, {"e1+", hi}}, {{"top", top}}});
                        bool add = validate_morphism(f, MorphismMode::additive).valid;
                        CHECK(add == validate_morphism(f, MorphismMode::weak_parity).valid);
                        additive_valid += add;
                    }
                }
            }
        }
    }
    CHECK(additive_valid > 0);
}

TEST_CASE("apply to cells") {
    GradedMorphism f = edge_to_path();
    CellTable e = atom(globe(1), {"top", 1});
    CHECK(apply_to_cell(f, e) == CellTable::make({set(0, {"0"}), set(1, {"01", "12"})},
                                                 {set(0, {"2"}), set(1, {"01", "12"})}));
    GradedMorphism id = GradedMorphism::identity(share(oriental(2)));
    for (const auto& t : enumerate_cells(oriental(2), 2)) CHECK(apply_to_cell(id, t) == t);
    CellTable bad = CellTable::make({set(0, {"e0-"}), Multiset(1)}, {set(0, {"e0+"}), Multiset(1)});
    CHECK_THROWS_AS(apply_to_cell(f, bad), std::invalid_argument);
    CHECK(apply_to_cell(collapse(), e) == CellTable::make({set(0, {"top"}), Multiset(1)}, {set(0, {"top"}), Multiset(1)}));
}

TEST_CASE("apply commutes with the cell operations") {
    Ptr o2 = share(oriental(2));
    auto ms = all_weak_parity_morphisms(o2, share(oriental(3)));
    auto cells = enumerate_cells(oriental(2), 2);
    for (std::size_t i = 0; i < ms.size(); i += 7) {
        const auto& f = ms[i];
        for (const auto& t : cells) {
            CellTable ft = apply_to_cell(f, t);
            CHECK(apply_to_cell(f, identity(t)) == identity(ft));
            for (std::size_t k = 0; k < t.dim(); ++k) {
                CHECK(apply_to_cell(f, face(t, k, Side::source)) == face(ft, k, Side::source));
                CHECK(apply_to_cell(f, face(t, k, Side::target)) == face(ft, k, Side::target));
            }
        }
    }
}

TEST_CASE("induced chain maps") {
    GradedMorphism f = edge_to_path();
    ChainMap m = induced_chain_map(f);
    CHECK(m.apply(1, SignedVector(1, {{"top", 1}})) == SignedVector(1, {{"01", 1}, {"12", 1}}));
    CHECK(m.commutes_with_boundary());
    CHECK(m.preserves_augmentation());
    ChainMap id = induced_chain_map(GradedMorphism::identity(share(oriental(3))));
    for (const auto& [x, v] : id.images()) CHECK(v == SignedVector(x.dim, {{x.name, 1}}));
    CHECK(morphism_from_chain_map(m, f.source_ptr(), f.target_ptr()) == f);

    GradedMorphism g = inclusion(2, 3);
    ChainMap both = compose_chain_maps(m, induced_chain_map(g));
    ChainMap direct = induced_chain_map(compose_morphisms(f, g, MorphismMode::additive));
    CHECK(both.images() == direct.images());

    GradedMorphism wrong(share(globe(1)), share(oriental(2)),
                         {{{"e0-", set(0, {"0"})}, {"e0+", set(0, {"2"})}}, {{"top", set(1, {"01"})}}});
    CHECK_THROWS_AS(induced_chain_map(wrong), std::invalid_argument);
    std::map<GeneratorId, SignedVector> neg = m.images();
    neg[{"top", 1}] = SignedVector(1, {{"02", -1}});
    ChainMap negative(m.source(), m.target(), neg);
    CHECK_FALSE(negative.commutes_with_boundary());
    CHECK_THROWS_AS(morphism_from_chain_map(negative, f.source_ptr(), f.target_ptr()), std::invalid_argument);
}

TEST_CASE("skeleton restriction") {
    GradedMorphism f = edge_to_path();
    GradedMorphism r = f.restrict_to_skeleton(0);
    CHECK(r.source().dimension_count() == 1);
    CHECK(r.image(0, "e0+") == set(0, {"2"}));
    CHECK(validate_morphism(r, MorphismMode::weak_parity).valid);
    CHECK(f.restrict_to_skeleton(5) == f);
}
