#include "paritykit/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace paritykit {

namespace {

const char* const kinds[] = {"parity_structure", "additive_parity_structure", "cell", "morphism"};

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FixtureError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw FixtureError(std::string("field '") + key + "': " + e.what());
    }
}

const Json& object_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FixtureError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Json faces_json(const Multiset& m, bool subset) {
    Json out = Json::array();
    for (const auto& [name, count] : m) {
        if (subset) {
            out.push_back(name);
        } else {
            out.push_back(Json::array({name, count}));
        }
    }
    return out;
}

Multiset faces_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw FixtureError("faces must be an array");
    Multiset out(dim);
    for (const auto& entry : j) {
        if (entry.is_string()) {
            out.add(entry.get<std::string>());
        } else if (entry.is_array() && entry.size() == 2 && entry[0].is_string() && entry[1].is_number_integer()) {
            Count c = entry[1].get<Count>();
            if (c < 0) throw FixtureError("negative multiplicity for '" + entry[0].get<std::string>() + "'");
            if (c > 0) out.add(entry[0].get<std::string>(), c);
        } else {
            throw FixtureError("face entries must be names or [name, count] pairs");
        }
    }
    return out;
}

bool is_fixture(const Json& j) { return j.is_object() && j.contains("schema_version"); }

Json failures_json(const std::vector<AxiomFailure>& failures) {
    Json out = Json::array();
    for (const auto& f : failures) {
        Json gens = Json::array();
        for (const auto& g : f.generators) gens.push_back(g.name + "@" + std::to_string(g.dim));
        out.push_back({{"axiom", f.axiom}, {"generators", gens}, {"explanation", f.explanation}});
    }
    return out;
}

Json names_json(const std::vector<GeneratorId>& ids) {
    Json out = Json::array();
    for (const auto& g : ids) out.push_back(g.name);
    return out;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

Fixture fixture_from_json(const Json& j) {
    if (!j.is_object()) throw FixtureError("fixture must be a JSON object");
    int version = field<int>(j, "schema_version");
    if (version != schema_version) throw FixtureError("unsupported schema_version " + std::to_string(version));
    Fixture f;
    f.name = j.contains("name") ? field<std::string>(j, "name") : std::string();
    f.kind = field<std::string>(j, "kind");
    if (std::find(std::begin(kinds), std::end(kinds), f.kind) == std::end(kinds)) {
        throw FixtureError("unknown fixture kind '" + f.kind + "'");
    }
    f.payload = object_field(j, "payload");
    return f;
}

Json fixture_to_json(const Fixture& f) {
    return {{"schema_version", schema_version}, {"name", f.name}, {"kind", f.kind}, {"payload", f.payload}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FixtureError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json(const std::string& path) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse_json(text);
    }
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json(text);
}

void write_json(const std::string& path, const Json& j) {
    if (path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------- structures

Json structure_payload(const AdditiveParityStructure& b) {
    const bool subset = b.is_subset_structure();
    Json elements = Json::array();
    for (const auto& e : b.elements()) {
        elements.push_back({{"id", e.name},
                            {"dim", e.dim},
                            {"neg", faces_json(e.neg, subset)},
                            {"pos", faces_json(e.pos, subset)}});
    }
    return {{"elements", elements}};
}

AdditiveParityStructure structure_from_payload(const Json& payload) {
    const Json& elements = object_field(payload, "elements");
    if (!elements.is_array()) throw FixtureError("'elements' must be an array");
    std::vector<Element> out;
    for (const auto& e : elements) {
        Element el;
        el.name = field<std::string>(e, "id");
        el.dim = field<std::size_t>(e, "dim");
        const std::size_t below = el.dim == 0 ? 0 : el.dim - 1;
        el.neg = e.contains("neg") ? faces_from_json(e.at("neg"), below) : Multiset(below);
        el.pos = e.contains("pos") ? faces_from_json(e.at("pos"), below) : Multiset(below);
        out.push_back(std::move(el));
    }
    try {
        return AdditiveParityStructure::from_elements(std::move(out));
    } catch (const std::invalid_argument& e) {
        throw FixtureError(e.what());
    } catch (const std::out_of_range& e) {
        throw FixtureError(e.what());
    }
}

Fixture structure_fixture(const std::string& name, const AdditiveParityStructure& b) {
    return {name, b.is_subset_structure() ? "parity_structure" : "additive_parity_structure", structure_payload(b)};
}

AdditiveParityStructure structure_from_json(const Json& j) {
    if (!is_fixture(j)) return structure_from_payload(j);
    Fixture f = fixture_from_json(j);
    if (f.kind != "parity_structure" && f.kind != "additive_parity_structure") {
        throw FixtureError("expected a structure fixture, got '" + f.kind + "'");
    }
    AdditiveParityStructure b = structure_from_payload(f.payload);
    if (f.kind == "parity_structure" && !b.is_subset_structure()) {
        throw FixtureError("parity_structure fixture has repeated faces");
    }
    return b;
}

// --------------------------------------------------------------------- cells

Json cell_payload(const CellTable& t) {
    Json neg = Json::array();
    Json pos = Json::array();
    for (std::size_t k = 0; k <= t.dim(); ++k) {
        bool subset = t.neg[k].is_subset() && t.pos[k].is_subset();
        neg.push_back(faces_json(t.neg[k], subset));
        pos.push_back(faces_json(t.pos[k], subset));
    }
    return {{"dim", t.dim()}, {"neg", neg}, {"pos", pos}};
}

CellTable cell_from_payload(const Json& payload) {
    std::size_t dim = field<std::size_t>(payload, "dim");
    const Json& neg = object_field(payload, "neg");
    const Json& pos = object_field(payload, "pos");
    if (!neg.is_array() || !pos.is_array() || neg.size() != dim + 1 || pos.size() != dim + 1) {
        throw FixtureError("cell rows must be arrays of dim + 1 columns");
    }
    std::vector<Multiset> m;
    std::vector<Multiset> p;
    for (std::size_t k = 0; k <= dim; ++k) {
        m.push_back(faces_from_json(neg[k], k));
        p.push_back(faces_from_json(pos[k], k));
    }
    return CellTable::make(std::move(m), std::move(p));
}

CellTable cell_from_json(const Json& j) {
    if (!is_fixture(j)) return cell_from_payload(j);
    Fixture f = fixture_from_json(j);
    if (f.kind != "cell") throw FixtureError("expected a cell fixture, got '" + f.kind + "'");
    return cell_from_payload(f.payload);
}

// ----------------------------------------------------------------- morphisms

std::string to_string(MorphismMode m) { return m == MorphismMode::additive ? "additive" : "weak_parity"; }

MorphismMode parse_morphism_mode(const std::string& s) {
    if (s == "additive") return MorphismMode::additive;
    if (s == "weak_parity") return MorphismMode::weak_parity;
    throw FixtureError("unknown morphism mode '" + s + "'");
}

Json morphism_payload(const GradedMorphism& f, MorphismMode mode) {
    Json assignment = Json::object();
    for (std::size_t n = 0; n < f.assignment().size(); ++n) {
        Json row = Json::object();
        for (const auto& [name, image] : f.assignment()[n]) row[name] = faces_json(image, image.is_subset());
        assignment[std::to_string(n)] = row;
    }
    return {{"source", structure_payload(f.source())},
            {"target", structure_payload(f.target())},
            {"mode", to_string(mode)},
            {"assignment", assignment}};
}

ParsedMorphism morphism_from_json(const Json& j) {
    Json payload = j;
    if (is_fixture(j)) {
        Fixture f = fixture_from_json(j);
        if (f.kind != "morphism") throw FixtureError("expected a morphism fixture, got '" + f.kind + "'");
        payload = f.payload;
    }
    auto src = std::make_shared<const AdditiveParityStructure>(structure_from_json(object_field(payload, "source")));
    auto tgt = std::make_shared<const AdditiveParityStructure>(structure_from_json(object_field(payload, "target")));
    MorphismMode mode =
        payload.contains("mode") ? parse_morphism_mode(field<std::string>(payload, "mode")) : MorphismMode::additive;
    const Json& a = object_field(payload, "assignment");
    if (!a.is_object()) throw FixtureError("'assignment' must be an object keyed by dimension");
    Assignment assignment;
    for (const auto& [key, row] : a.items()) {
        std::size_t dim = 0;
        try {
            std::size_t used = 0;
            dim = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw FixtureError("assignment key '" + key + "' is not a dimension");
        }
        if (!row.is_object()) throw FixtureError("assignment rows must be objects");
        if (assignment.size() <= dim) assignment.resize(dim + 1);
        for (const auto& [name, image] : row.items()) assignment[dim][name] = faces_from_json(image, dim);
    }
    try {
        return {GradedMorphism(std::move(src), std::move(tgt), std::move(assignment)), mode};
    } catch (const std::invalid_argument& e) {
        throw FixtureError(e.what());
    } catch (const std::out_of_range& e) {
        throw FixtureError(e.what());
    }
}

// --------------------------------------------------------------- expressions

Json expression_to_json(const AtomExpression& e) {
    switch (e.kind) {
        case AtomExpression::Kind::atom:
            return Json::array({"atom", e.generator.name});
        case AtomExpression::Kind::identity:
            return Json::array({"id", expression_to_json(*e.left)});
        case AtomExpression::Kind::compose:
            return Json::array({"compose", e.k, expression_to_json(*e.left), expression_to_json(*e.right)});
    }
    return nullptr;
}

ExpressionPtr expression_from_json(const Json& j, const AdditiveParityStructure& b) {
    if (!j.is_array() || j.empty() || !j[0].is_string()) throw FixtureError("malformed expression");
    const std::string tag = j[0].get<std::string>();
    if (tag == "atom" && j.size() == 2 && j[1].is_string()) {
        const std::string name = j[1].get<std::string>();
        std::optional<GeneratorId> found;
        for (const auto& g : b.all_generators()) {
            if (g.name != name) continue;
            if (found) throw FixtureError("atom name '" + name + "' is ambiguous");
            found = g;
        }
        if (!found) throw FixtureError("unknown atom '" + name + "'");
        return AtomExpression::make_atom(*found);
    }
    if (tag == "id" && j.size() == 2) return AtomExpression::make_identity(expression_from_json(j[1], b));
    if (tag == "compose" && j.size() == 4 && j[1].is_number_unsigned()) {
        return AtomExpression::make_compose(j[1].get<std::size_t>(), expression_from_json(j[2], b),
                                            expression_from_json(j[3], b));
    }
    throw FixtureError("malformed expression");
}

// ------------------------------------------------------------------- reports

std::string format_cycle(const std::vector<GeneratorId>& cycle) {
    std::string out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += " -> ";
        out += cycle[i].name;
    }
    return out;
}

Json report_to_json(const ValidationReport& r) {
    Json j;
    j["classification"] = to_string(r.classification, r.subset_faces);
    j["subset_faces"] = r.subset_faces;
    j["disjoint"] = r.disjoint;
    j["globular"] = r.globular;
    j["globular_subset"] = r.globular_subset ? Json(*r.globular_subset) : Json(nullptr);
    j["normal"] = r.normal;
    j["unital"] = r.unital;
    j["unital_parity"] = r.unital_parity ? Json(*r.unital_parity) : Json(nullptr);
    j["unital_chain"] = r.unital_chain;
    j["weakly_loop_free"] = r.weakly_loop_free;
    j["steiner_loop_free"] = r.steiner_loop_free;
    j["strongly_loop_free"] = r.strongly_loop_free;
    Json weak = Json::array();
    for (std::size_t i = 0; i < r.weak_witnesses.size(); ++i) {
        const auto& w = r.weak_witnesses[i];
        weak.push_back({{"dim", i + 1},
                        {"acyclic", w.acyclic},
                        {"order", names_json(w.order)},
                        {"cycle", names_json(w.cycle)}});
    }
    j["weak_witnesses"] = weak;
    Json steiner = Json::array();
    for (std::size_t i = 0; i < r.steiner_witnesses.size(); ++i) {
        const auto& w = r.steiner_witnesses[i];
        steiner.push_back({{"level", i}, {"acyclic", w.acyclic}, {"cycle", names_json(w.cycle)}});
    }
    j["steiner_witnesses"] = steiner;
    j["strong_witness"] = {{"acyclic", r.strong_witness.acyclic},
                           {"order", names_json(r.strong_witness.order)},
                           {"cycle", names_json(r.strong_witness.cycle)}};
    j["failures"] = failures_json(r.failures);
    return j;
}

Json report_to_json(const ChainReport& r) {
    Json off = Json::array();
    for (const auto& g : r.offending) off.push_back(g.name + "@" + std::to_string(g.dim));
    Json nu = Json::array();
    for (const auto& g : r.non_unital) nu.push_back(g.name + "@" + std::to_string(g.dim));
    return {{"boundary_squared_zero", r.boundary_squared_zero},
            {"offending", off},
            {"normal", r.normal},
            {"unital", r.unital},
            {"non_unital", nu},
            {"augmentation_compatible", r.augmentation_compatible}};
}

Json report_to_json(const MorphismReport& r) {
    return {{"valid", r.valid}, {"normal", r.normal}, {"failures", r.failures}};
}

void write_report(std::ostream& os, const ValidationReport& r) {
    os << "classification: " << to_string(r.classification, r.subset_faces) << '\n';
    os << "subset faces: " << yes(r.subset_faces) << '\n';
    os << "disjoint: " << yes(r.disjoint) << '\n';
    os << "globular: " << yes(r.globular);
    if (r.globular_subset) os << " (subset form: " << yes(*r.globular_subset) << ')';
    os << '\n';
    os << "normal: " << yes(r.normal) << '\n';
    os << "unital: " << yes(r.unital) << " (";
    if (r.unital_parity) os << "parity: " << yes(*r.unital_parity) << ", ";
    os << "chain: " << yes(r.unital_chain) << ")\n";
    os << "weakly loop-free: " << yes(r.weakly_loop_free) << '\n';
    os << "Steiner loop-free: " << yes(r.steiner_loop_free) << '\n';
    os << "strongly loop-free: " << yes(r.strongly_loop_free) << '\n';
    for (std::size_t i = 0; i < r.weak_witnesses.size(); ++i) {
        if (!r.weak_witnesses[i].acyclic) {
            os << "weak cycle in dimension " << i + 1 << ": " << format_cycle(r.weak_witnesses[i].cycle) << '\n';
        }
    }
    if (!r.strong_witness.acyclic) os << "strong cycle: " << format_cycle(r.strong_witness.cycle) << '\n';
    for (const auto& f : r.failures) os << "failure [" << f.axiom << "] " << f.explanation << '\n';
}

}  // namespace paritykit
