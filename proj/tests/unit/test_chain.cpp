#include <doctest.h>

#include <random>
#include <sstream>

#include "paritykit/chain.hpp"
#include "paritykit/generators.hpp"
#include "support/oracles.hpp"
#include "support/random_structures.hpp"

using namespace paritykit;
using namespace paritykit::testing;

TEST_CASE("complex of oriental 2") {
    FreeDirectedComplex k = FreeDirectedComplex::from_structure(oriental(2).additive());
    CHECK(k.boundary(2, "012") == SignedVector(1, {{"01", 1}, {"02", -1}, {"12", 1}}));
    REQUIRE(k.has_augmentation());
    for (const char* v : {"0", "1", "2"}) CHECK(k.augmentation(SignedVector(0, {{v, 1}})) == 1);
    CHECK(k.boundary(2, SignedVector(2, {{"012", 1}})) == SignedVector(1, {{"01", 1}, {"02", -1}, {"12", 1}}));
    CHECK(k.boundary(2, SignedVector(2)).is_zero());
    CHECK_THROWS_AS(k.boundary(1, SignedVector(1, {{"nope", 1}})), UnknownGenerator);
}

TEST_CASE("globe boundaries") {
    FreeDirectedComplex g1 = FreeDirectedComplex::from_structure(globe(1).additive());
    CHECK(g1.boundary(1, "top") == SignedVector(0, {{"e0+", 1}, {"e0-", -1}}));
    FreeDirectedComplex g2 = FreeDirectedComplex::from_structure(globe(2).additive());
    CHECK(g2.boundary(2, SignedVector(2, {{"top", 1}})) == SignedVector(1, {{"e1+", 1}, {"e1-", -1}}));
}

TEST_CASE("non-normal structures get no augmentation") {
    auto b = AdditiveParityStructure::from_elements(
        {{"u", 0, {}, {}}, {"v", 0, {}, {}}, {"w", 0, {}, {}},
         {"e", 1, Multiset(0, {{"u", 1}, {"v", 1}}), Multiset(0, {{"w", 1}})}});
    FreeDirectedComplex k = FreeDirectedComplex::from_structure(b);
    CHECK_FALSE(k.has_augmentation());
    CHECK_THROWS_AS(k.augmentation(SignedVector(0, {{"u", 1}})), std::logic_error);
    CHECK_FALSE(check_complex(k).normal);
}

TEST_CASE("check_complex on fixtures") {
    for (std::size_t n = 0; n <= 5; ++n) {
        ChainReport r = check_complex(FreeDirectedComplex::from_structure(oriental(n).additive()));
        CHECK(r.boundary_squared_zero);
        CHECK(r.normal);
        CHECK(r.unital);
        CHECK(r.augmentation_compatible);
    }
    ChainReport circle = check_complex(FreeDirectedComplex::from_structure(load_additive("circle.json")));
    CHECK((circle.boundary_squared_zero && circle.normal && circle.unital));
    ChainReport bad = check_complex(FreeDirectedComplex::from_structure(load_additive("non_globular.json")));
    CHECK_FALSE(bad.boundary_squared_zero);
    CHECK(bad.offending == std::vector<GeneratorId>{{"s", 2}});
}

TEST_CASE("well-formed elements") {
    FreeDirectedComplex k = FreeDirectedComplex::from_structure(oriental(2).additive());
    CHECK(is_well_formed_element(k, 1, Multiset(1, {{"01", 1}, {"12", 1}})));
    CHECK_FALSE(is_well_formed_element(k, 1, Multiset(1, {{"01", 2}})));
    CHECK(is_well_formed_element(k, 0, Multiset(0, {{"0", 1}})));
    CHECK_FALSE(is_well_formed_element(k, 0, Multiset(0, {{"0", 1}, {"1", 1}})));
    FreeDirectedComplex bare = FreeDirectedComplex::from_boundaries({{"x"}}, {});
    CHECK_THROWS_AS(is_well_formed_element(bare, 0, Multiset(0, {{"x", 1}})), std::logic_error);
}

TEST_CASE("boundary report") {
    std::ostringstream os;
    write_boundary_report(os, FreeDirectedComplex::from_structure(oriental(1).additive()));
    CHECK(os.str() == "0@0: eps=1\n1@0: eps=1\n01@1: -0 +1\n");
}

TEST_CASE("chain-level and structure-level properties agree") {
    std::mt19937_64 rng(3);
    RandomOptions opt;
    opt.globular_bias = true;
    opt.normal_edges = true;
    for (int i = 0; i < 300; ++i) {
        opt.max_count = i % 2 ? 1 : 2;
        AdditiveParityStructure b = random_structure(rng, opt);
        FreeDirectedComplex k = FreeDirectedComplex::from_structure(b);
        ChainReport cr = check_complex(k);
        ValidationReport vr = validate(b);
        CHECK(cr.boundary_squared_zero == vr.globular);
        CHECK(cr.normal == vr.normal);
        CHECK(k.has_augmentation() == vr.normal);
        if (k.has_augmentation()) CHECK(cr.augmentation_compatible);
        if (b.is_subset_structure() && vr.normal) {
            ParityStructure c = ParityStructure::from_additive(b);
            ValidationReport pr = validate(c);
            if (pr.globular) {
                REQUIRE(pr.unital_parity.has_value());
                CHECK(*pr.unital_parity == pr.unital_chain);
            }
            // well-formed subsets are well-formed elements
            for (std::size_t n = 0; n < c.dimension_count(); ++n) {
                for (const auto& s : subsets_where(c.generators(n), n, [](const Multiset& m) { return m.support_size() <= 3; })) {
                    CHECK(is_well_formed(c, n, s) == is_well_formed_element(k, n, s));
                }
            }
        }
        // parts of the boundary give the faces back
        for (const auto& x : b.all_generators()) {
            if (x.dim == 0) continue;
            Parts p = parts(k.boundary(x.dim, x.name));
            CHECK(p.neg == b.faces(x).neg);
            CHECK(p.pos == b.faces(x).pos);
        }
    }
}
