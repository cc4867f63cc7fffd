/**
 * JSON fixture format.
 *
 * {"schema_version": 1, "name": ..., "kind": ..., "payload": ...} where kind
 * is parity_structure, additive_parity_structure, cell or morphism. Keys are
 * written sorted so identical inputs give identical bytes.
 */

#ifndef PARITYKIT_IO_HPP
#define PARITYKIT_IO_HPP

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "paritykit/cells.hpp"
#include "paritykit/chain.hpp"
#include "paritykit/morphisms.hpp"
#include "paritykit/parity_core.hpp"

namespace paritykit {

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

class FixtureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Fixture {
    std::string name;
    std::string kind;
    Json payload;
};

/** Throws FixtureError on unknown versions, kinds or missing fields. */
Fixture fixture_from_json(const Json& j);
Json fixture_to_json(const Fixture& f);

/** Reads a file ("-" is standard input). */
Json read_json(const std::string& path);
Json parse_json(const std::string& text);
/** Pretty-printed with a trailing newline ("-" is standard output). */
void write_json(const std::string& path, const Json& j);

/** Faces of subset structures are name lists, otherwise [name, count] pairs. */
Json structure_payload(const AdditiveParityStructure& b);
AdditiveParityStructure structure_from_payload(const Json& payload);
Fixture structure_fixture(const std::string& name, const AdditiveParityStructure& b);
/** Accepts a structure fixture or a bare payload. */
AdditiveParityStructure structure_from_json(const Json& j);

Json cell_payload(const CellTable& t);
CellTable cell_from_payload(const Json& payload);
/** Accepts a cell fixture or a bare payload. */
CellTable cell_from_json(const Json& j);

Json morphism_payload(const GradedMorphism& f, MorphismMode mode);
struct ParsedMorphism {
    GradedMorphism morphism;
    MorphismMode mode;
};
/** Source and target are structure fixtures or bare payloads. */
ParsedMorphism morphism_from_json(const Json& j);

/** ["atom", name], ["id", inner] or ["compose", k, left, right]. */
Json expression_to_json(const AtomExpression& e);
/** Atom names are looked up in `b` and must be unambiguous. */
ExpressionPtr expression_from_json(const Json& j, const AdditiveParityStructure& b);

std::string to_string(MorphismMode m);
MorphismMode parse_morphism_mode(const std::string& s);

Json report_to_json(const ValidationReport& r);
Json report_to_json(const ChainReport& r);
Json report_to_json(const MorphismReport& r);

/** Human-readable validation report. */
void write_report(std::ostream& os, const ValidationReport& r);
std::string format_cycle(const std::vector<GeneratorId>& cycle);

}  // namespace paritykit

#endif  // PARITYKIT_IO_HPP
