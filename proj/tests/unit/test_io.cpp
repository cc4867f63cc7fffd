#include <doctest.h>

#include "paritykit/generators.hpp"
#include "paritykit/io.hpp"
#include "support/oracles.hpp"

using namespace paritykit;
using namespace paritykit::testing;

TEST_CASE("structure fixtures round-trip") {
    for (const char* name : {"circle.json", "oriental2.json", "cube2.json", "weak_not_strong_10.json",
                             "additive_double.json", "non_globular.json"}) {
        Json j = read_json(fixture_path(name));
        AdditiveParityStructure b = structure_from_json(j);
        Json again = fixture_to_json(structure_fixture(fixture_from_json(j).name, b));
        CHECK(structure_from_json(again) == b);
        CHECK(again.dump() == fixture_to_json(structure_fixture(fixture_from_json(j).name, structure_from_json(again))).dump());
    }
    Json j = fixture_to_json(structure_fixture("c", cube(2).additive()));
    CHECK(j["kind"] == "parity_structure");
    CHECK(j["payload"]["elements"][0]["neg"].is_array());
    Json d = fixture_to_json(structure_fixture("d", load_additive("additive_double.json")));
    CHECK(d["kind"] == "additive_parity_structure");
}

TEST_CASE("multiset faces may be pairs") {
    Json p = parse_json(R"({"elements":[{"id":"x","dim":0,"neg":[],"pos":[]},{"id":"y","dim":0},
        {"id":"e","dim":1,"neg":[["x",1]],"pos":["y"]}]})");
    AdditiveParityStructure b = structure_from_payload(p);
    CHECK(b.faces(1, "e").neg == Multiset(0, {{"x", 1}}));
    CHECK(b.faces(1, "e").pos == Multiset(0, {{"y", 1}}));
}

TEST_CASE("malformed fixtures are rejected") {
    CHECK_THROWS_AS(fixture_from_json(parse_json(R"({"schema_version":2,"kind":"cell","payload":{}})")), FixtureError);
    CHECK_THROWS_AS(fixture_from_json(parse_json(R"({"schema_version":1,"kind":"torus","payload":{}})")), FixtureError);
    CHECK_THROWS_AS(fixture_from_json(parse_json(R"({"schema_version":1,"kind":"cell"})")), FixtureError);
    CHECK_THROWS_AS(parse_json("{"), FixtureError);
    CHECK_THROWS_AS(structure_from_payload(parse_json(R"({"elements":[{"id":"e","dim":1,"neg":["x"],"pos":[]}]})")),
                    FixtureError);
    CHECK_THROWS_AS(structure_from_payload(parse_json(R"({"elements":[{"id":"x","dim":0,"neg":[3]}]})")), FixtureError);
    CHECK_THROWS_AS(read_json("/nonexistent/file.json"), FixtureError);
    Json multi = fixture_to_json(structure_fixture("d", load_additive("additive_double.json")));
    multi["kind"] = "parity_structure";
    CHECK_THROWS_AS(structure_from_json(multi), FixtureError);
}

TEST_CASE("cells round-trip") {
    for (const auto& t : enumerate_cells(oriental(2), 2)) {
        Json j = fixture_to_json({"t", "cell", cell_payload(t)});
        CHECK(cell_from_json(j) == t);
        CHECK(cell_from_json(cell_payload(t)) == t);
    }
    CHECK(cell_payload(atom(oriental(2), {"012", 2})).dump() ==
          R"({"dim":2,"neg":[["0"],["02"],["012"]],"pos":[["2"],["01","12"],["012"]]})");
    CHECK_THROWS_AS(cell_from_payload(parse_json(R"({"dim":1,"neg":[["0"]],"pos":[["0"]]})")), FixtureError);
}

TEST_CASE("morphisms round-trip") {
    for (const char* name : {"globe1_to_oriental2.json", "collapse_globe1_globe0.json", "oriental2_to_oriental3.json"}) {
        ParsedMorphism m = load_morphism(name);
        CHECK(m.mode == MorphismMode::weak_parity);
        ParsedMorphism again = morphism_from_json(fixture_to_json({"m", "morphism", morphism_payload(m.morphism, m.mode)}));
        CHECK(again.morphism == m.morphism);
        CHECK(again.mode == m.mode);
    }
    Json bad = read_json(fixture_path("globe1_to_oriental2.json"));
    bad["payload"]["assignment"]["x"] = Json::object();
    CHECK_THROWS_AS(morphism_from_json(bad), FixtureError);
    Json partial = read_json(fixture_path("globe1_to_oriental2.json"));
    partial["payload"]["assignment"]["1"] = Json::object();
    CHECK_THROWS_AS(morphism_from_json(partial), FixtureError);
}

TEST_CASE("expressions round-trip") {
    ParityStructure o2 = oriental(2);
    AtomClosure closure(o2, 2);
    for (const auto& [t, e] : closure.witnesses()) {
        Json j = expression_to_json(*e);
        ExpressionPtr back = expression_from_json(j, o2.additive());
        CHECK(expression_to_json(*back) == j);
        CHECK(evaluate(o2, *back) == t);
    }
    CHECK(expression_to_json(*AtomExpression::make_atom({"012", 2})).dump() == R"(["atom","012"])");
    CHECK_THROWS_AS(expression_from_json(parse_json(R"(["atom","9"])"), o2.additive()), FixtureError);
    CHECK_THROWS_AS(expression_from_json(parse_json(R"(["glue"])"), o2.additive()), FixtureError);
}

TEST_CASE("reports serialize deterministically") {
    ValidationReport r = validate(load_parity("circle.json"));
    Json j = report_to_json(r);
    CHECK(j["classification"] == "additive parity complex");
    CHECK(j["weakly_loop_free"] == false);
    CHECK(j["weak_witnesses"][0]["cycle"] == Json::array({"a", "b", "a"}));
    CHECK(j.dump() == report_to_json(validate(load_parity("circle.json"))).dump());
    CHECK(format_cycle(r.weak_witnesses[0].cycle) == "a -> b -> a");
}
