#include <doctest.h>

#include <random>

#include "paritykit/multiset.hpp"
#include "support/oracles.hpp"

using namespace paritykit;
using paritykit::testing::show;

namespace {

Multiset random_multiset(std::mt19937_64& rng, std::size_t dim) {
    Multiset m(dim);
    for (const char* name : {"a", "b", "c", "d"}) {
        Count c = std::uniform_int_distribution<Count>(0, 3)(rng);
        if (c) m.add(name, c);
    }
    return m;
}

}  // namespace

TEST_CASE("disjoint union adds counts") {
    CHECK(disjoint_union(Multiset(1, {{"a", 1}}), Multiset(1, {{"a", 1}, {"b", 1}})) ==
          Multiset(1, {{"a", 2}, {"b", 1}}));
    Multiset s(1, {{"x", 3}});
    CHECK(disjoint_union(Multiset(1), s) == s);
    CHECK(disjoint_union(Multiset(1, {{"01", 1}}), Multiset(1, {{"12", 1}})) == Multiset(1, {{"01", 1}, {"12", 1}}));
}

TEST_CASE("truncated difference") {
    CHECK(difference(Multiset(0, {{"a", 2}, {"b", 1}}), Multiset(0, {{"a", 1}, {"c", 3}})) ==
          Multiset(0, {{"a", 1}, {"b", 1}}));
    Multiset s(0, {{"a", 2}});
    CHECK(difference(s, s).empty());
    CHECK(difference(Multiset(0, {{"0", 1}, {"1", 1}}), Multiset(0, {{"1", 1}, {"2", 1}})) == Multiset(0, {{"0", 1}}));
}

TEST_CASE("meet and join") {
    MeetJoin mj = meet_join(Multiset(0, {{"a", 2}, {"b", 1}}), Multiset(0, {{"a", 1}, {"c", 1}}));
    CHECK(mj.meet == Multiset(0, {{"a", 1}}));
    CHECK(mj.join == Multiset(0, {{"a", 2}, {"b", 1}, {"c", 1}}));
    Multiset s(0, {{"q", 2}});
    CHECK(meet_join(s, Multiset(0)).meet.empty());
    CHECK(meet_join(s, Multiset(0)).join == s);
    CHECK(disjoint(Multiset(0, {{"0", 1}}), Multiset(0, {{"2", 1}})));
}

TEST_CASE("parts of signed vectors") {
    SignedVector v(1, {{"01", 1}, {"02", -1}, {"12", 1}});
    Parts p = parts(v);
    CHECK(p.neg == Multiset(1, {{"02", 1}}));
    CHECK(p.pos == Multiset(1, {{"01", 1}, {"12", 1}}));
    CHECK(parts(SignedVector(1)).neg.empty());
    CHECK(parts(SignedVector(1)).pos.empty());
    Parts q = parts(SignedVector(0, {{"b", -2}, {"a", 1}}));
    CHECK(q.neg == Multiset(0, {{"b", 2}}));
    CHECK(q.pos == Multiset(0, {{"a", 1}}));
    CHECK(show(v) == "+01 -02 +12");
    CHECK(show(SignedVector(0)) == "0");
}

TEST_CASE("radical multisets") {
    CHECK(is_radical(Multiset(0, {{"a", 1}, {"b", 1}})));
    CHECK_FALSE(is_radical(Multiset(0, {{"a", 2}})));
    CHECK(is_radical(Multiset(0)));
}

TEST_CASE("dimension mismatch is an error") {
    CHECK_THROWS_AS(disjoint_union(Multiset(0, {{"a", 1}}), Multiset(1, {{"b", 1}})), DimensionMismatch);
    CHECK_THROWS_AS(difference(Multiset(0), Multiset(1)), DimensionMismatch);
    CHECK_THROWS_AS(meet_join(Multiset(2), Multiset(1)), DimensionMismatch);
}

TEST_CASE("counts never wrap") {
    Multiset big(0, {{"a", std::numeric_limits<Count>::max()}});
    CHECK_THROWS_AS(disjoint_union(big, Multiset(0, {{"a", 1}})), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(std::numeric_limits<Count>::max(), 2), std::overflow_error);
}

TEST_CASE("no zero entries are stored") {
    SignedVector v(0, {{"a", 1}});
    v -= SignedVector(0, {{"a", 1}});
    CHECK(v.is_zero());
    CHECK(v.entries().empty());
    CHECK_THROWS(Multiset(0).add("a", 0));
}

TEST_CASE("monoid and lattice laws on random multisets") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Multiset s = random_multiset(rng, 2);
        Multiset t = random_multiset(rng, 2);
        Multiset u = random_multiset(rng, 2);
        CHECK(disjoint_union(difference(s, t), meet(s, t)) == s);
        CHECK(disjoint_union(s, t) == disjoint_union(t, s));
        CHECK(disjoint_union(disjoint_union(s, t), u) == disjoint_union(s, disjoint_union(t, u)));
        CHECK(disjoint_union(s, Multiset(2)) == s);
        // parts inverts the difference of a disjoint pair
        Multiset m = difference(s, t);
        Multiset p = difference(t, s);
        Parts pp = parts(SignedVector::difference(p, m));
        CHECK(pp.neg == m);
        CHECK(pp.pos == p);
        // pairwise disjoint radicals have a radical sum, and conversely
        Multiset rs(2);
        Multiset rt(2);
        for (const auto& [n, _] : s) rs.add(n);
        for (const auto& [n, _] : t) rt.add(n);
        CHECK(is_radical(disjoint_union(rs, rt)) == disjoint(rs, rt));
    }
}
