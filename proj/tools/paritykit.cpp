// paritykit command-line tool.
//
// Exit codes: 0 success, 1 the requested check failed, 2 usage or malformed input.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "paritykit/cells.hpp"
#include "paritykit/chain.hpp"
#include "paritykit/generators.hpp"
#include "paritykit/io.hpp"
#include "paritykit/morphisms.hpp"
#include "paritykit/parity_core.hpp"

using namespace paritykit;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised for well-formed input that fails the requested check.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool structured = false;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

AdditiveParityStructure load_structure(const std::string& path) { return structure_from_json(read_json(path)); }

ParityStructure load_parity(const std::string& path) {
    AdditiveParityStructure b = load_structure(path);
    if (!b.is_subset_structure()) throw UsageError("this command needs a parity structure (subset faces)");
    return ParityStructure::from_additive(std::move(b));
}

// A cell argument is inline JSON or a file name.
CellTable load_cell(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return cell_from_json(parse_json(arg));
    return cell_from_json(read_json(arg));
}

void require_valid_cell(const FreeDirectedComplex& k, const CellTable& t) {
    CellCheck c = validate_cell(k, t, k.has_augmentation() ? CellMode::nu : CellMode::rho);
    if (!c.valid) throw CheckFailed("not a cell: " + c.reason);
}

GeneratorId resolve_id(const AdditiveParityStructure& b, const std::string& id) {
    if (auto at = id.rfind('@'); at != std::string::npos) {
        std::size_t dim = 0;
        try {
            dim = std::stoul(id.substr(at + 1));
        } catch (const std::exception&) {
            throw UsageError("bad generator id '" + id + "'");
        }
        GeneratorId g{id.substr(0, at), dim};
        if (!b.contains(g)) throw UsageError("unknown generator '" + id + "'");
        return g;
    }
    std::vector<GeneratorId> found;
    for (const auto& g : b.all_generators()) {
        if (g.name == id) found.push_back(g);
    }
    if (found.empty()) throw UsageError("unknown generator '" + id + "'");
    if (found.size() > 1) throw UsageError("generator '" + id + "' is ambiguous; use name@dim");
    return found.front();
}

Classification parse_requirement(const std::string& s) {
    if (s == "apc") return Classification::additive_parity_complex;
    if (s == "wpc") return Classification::weak_parity_complex;
    if (s == "pc") return Classification::parity_complex;
    throw UsageError("unknown requirement '" + s + "'");
}

Json cells_json(const std::vector<CellTable>& cells) {
    Json out = Json::array();
    for (const auto& t : cells) out.push_back(cell_payload(t));
    return out;
}

void print_cells(const std::vector<CellTable>& cells) {
    if (structured) {
        emit(cells_json(cells));
    } else {
        for (const auto& t : cells) std::cout << t << '\n';
    }
}

// ---------------------------------------------------------------- commands

int cmd_validate(const std::string& file, const std::string& require) {
    AdditiveParityStructure b = load_structure(file);
    ValidationReport r = b.is_subset_structure() ? validate(ParityStructure::from_additive(b)) : validate(b);
    if (structured) {
        emit(report_to_json(r));
    } else {
        write_report(std::cout, r);
    }
    if (!require.empty() && !r.meets(parse_requirement(require))) return 1;
    return 0;
}

int cmd_classify(const std::string& file) {
    AdditiveParityStructure b = load_structure(file);
    ValidationReport r = b.is_subset_structure() ? validate(ParityStructure::from_additive(b)) : validate(b);
    std::string label = to_string(r.classification, r.subset_faces);
    if (structured) {
        emit({{"classification", label}});
    } else {
        std::cout << label << '\n';
    }
    return 0;
}

int cmd_generate(const std::string& family, std::size_t n, const std::string& out) {
    FamilySpec spec{parse_family(family), n};
    ParityStructure c = generate(spec);
    write_json(out, fixture_to_json(structure_fixture(family + std::to_string(n), c.additive())));
    return 0;
}

int cmd_chain(const std::string& file, bool check) {
    FreeDirectedComplex k = FreeDirectedComplex::from_structure(load_structure(file));
    ChainReport r = check_complex(k);
    if (structured) {
        Json j = report_to_json(r);
        std::ostringstream os;
        write_boundary_report(os, k);
        j["boundaries"] = os.str();
        emit(j);
    } else {
        write_boundary_report(std::cout, k);
        if (check) {
            std::cout << "boundary squared zero: " << (r.boundary_squared_zero ? "yes" : "no") << '\n';
            for (const auto& g : r.offending) std::cout << "  dd(" << g.name << ") != 0\n";
            std::cout << "normal: " << (r.normal ? "yes" : "no") << '\n';
            std::cout << "unital: " << (r.unital ? "yes" : "no") << '\n';
        }
    }
    return check && !r.boundary_squared_zero ? 1 : 0;
}

int cmd_atom(const std::string& file, const std::string& id) {
    AdditiveParityStructure b = load_structure(file);
    GeneratorId x = resolve_id(b, id);
    FreeDirectedComplex k = FreeDirectedComplex::from_structure(b);
    CellTable t = chain_atom(k, x);
    CellCheck c = validate_cell(k, t, k.has_augmentation() ? CellMode::nu : CellMode::rho);
    if (structured) {
        Json j = cell_payload(t);
        j["valid"] = c.valid;
        if (!c.valid) j["reason"] = c.reason;
        emit(j);
    } else {
        std::cout << t << '\n';
        if (!c.valid) std::cout << "not a cell: " << c.reason << '\n';
    }
    return c.valid ? 0 : 1;
}

int cmd_cells(const std::string& file, std::size_t max_dim, bool count_only) {
    ParityStructure c = load_parity(file);
    if (!validate(c).weakly_loop_free) throw CheckFailed("structure is not weakly loop-free");
    std::vector<CellTable> cells = enumerate_cells(c, max_dim);
    if (count_only) {
        std::vector<std::size_t> counts(max_dim + 1, 0);
        for (const auto& t : cells) ++counts[t.dim()];
        if (structured) {
            emit(counts);
        } else {
            for (std::size_t i = 0; i < counts.size(); ++i) std::cout << (i ? " " : "") << counts[i];
            std::cout << '\n';
        }
        return 0;
    }
    print_cells(cells);
    return 0;
}

int cmd_face(const std::string& file, const std::string& cell, std::size_t k, const std::string& sign) {
    FreeDirectedComplex kx = FreeDirectedComplex::from_structure(load_structure(file));
    CellTable t = load_cell(cell);
    require_valid_cell(kx, t);
    if (sign != "source" && sign != "target") throw UsageError("--sign must be source or target");
    if (k >= t.dim()) throw UsageError("-k must be below the cell dimension");
    CellTable f = face(t, k, sign == "source" ? Side::source : Side::target);
    print_cells({f});
    return 0;
}

int cmd_compose(const std::string& file, const std::vector<std::string>& cells, std::size_t k) {
    AdditiveParityStructure b = load_structure(file);
    FreeDirectedComplex kx = FreeDirectedComplex::from_structure(b);
    CellTable x = load_cell(cells.at(0));
    CellTable y = load_cell(cells.at(1));
    require_valid_cell(kx, x);
    require_valid_cell(kx, y);
    if (!composable(x, y, k)) throw CheckFailed("cells are not composable along dimension " + std::to_string(k));
    print_cells({compose(x, y, k, b.is_subset_structure() ? ColumnSum::disjoint_subsets : ColumnSum::add)});
    return 0;
}

int cmd_decompose(const std::string& file, const std::string& cell) {
    FreeDirectedComplex kx = FreeDirectedComplex::from_structure(load_structure(file));
    CellTable t = load_cell(cell);
    require_valid_cell(kx, t);
    if (t.dim() == 0) throw UsageError("cannot decompose a 0-cell");
    print_cells(excision_decompose(kx, t));
    return 0;
}

int cmd_morphism_validate(const std::string& file, const std::string& mode_override) {
    ParsedMorphism m = morphism_from_json(read_json(file));
    MorphismMode mode = mode_override.empty() ? m.mode : parse_morphism_mode(mode_override);
    MorphismReport r = validate_morphism(m.morphism, mode);
    if (structured) {
        emit(report_to_json(r));
    } else {
        std::cout << (r.valid ? "valid" : "invalid") << ' ' << to_string(mode) << " morphism"
                  << (r.normal ? " (normal)" : "") << '\n';
        for (const auto& f : r.failures) std::cout << "failure: " << f << '\n';
    }
    return r.valid ? 0 : 1;
}

int cmd_morphism_compose(const std::string& first, const std::string& second, const std::string& out) {
    ParsedMorphism f = morphism_from_json(read_json(first));
    ParsedMorphism g = morphism_from_json(read_json(second));
    if (f.mode != g.mode) throw UsageError("morphisms have different modes");
    for (const auto* m : {&f, &g}) {
        if (!validate_morphism(m->morphism, m->mode).valid) throw CheckFailed("input morphism is not valid");
    }
    if (!(f.morphism.target() == g.morphism.source())) throw CheckFailed("target of the first is not the source of the second");
    GradedMorphism h = compose_morphisms(f.morphism, g.morphism, f.mode);
    write_json(out, fixture_to_json({"composite", "morphism", morphism_payload(h, f.mode)}));
    return 0;
}

int cmd_morphism_apply(const std::string& file, const std::string& cell) {
    ParsedMorphism m = morphism_from_json(read_json(file));
    if (!validate_morphism(m.morphism, m.mode).valid) throw CheckFailed("morphism is not valid");
    FreeDirectedComplex ks = FreeDirectedComplex::from_structure(m.morphism.source());
    CellTable t = load_cell(cell);
    require_valid_cell(ks, t);
    print_cells({apply_to_cell(m.morphism, t)});
    return 0;
}

int cmd_roundtrip(const std::string& file) {
    AdditiveParityStructure b = load_structure(file);
    AdditiveParityStructure back = FreeDirectedComplex::from_structure(b).extract_basis();
    const bool same = back == b;
    if (structured) {
        emit({{"isomorphic", same}});
    } else {
        std::cout << (same ? "round trip preserves the structure" : "round trip changed the structure") << '\n';
    }
    return same ? 0 : 1;
}

int cmd_freeness(const std::string& file, std::size_t max_dim) {
    ParityStructure c = load_parity(file);
    if (!validate(c).weakly_loop_free) throw CheckFailed("structure is not weakly loop-free");
    std::vector<CellTable> cells = enumerate_cells(c, max_dim);
    AtomClosure closure(c, max_dim);
    std::vector<CellTable> missing;
    Json witnesses = Json::array();
    for (const auto& t : cells) {
        auto w = closure.find(t);
        if (!w) {
            missing.push_back(t);
        } else if (structured) {
            witnesses.push_back({{"cell", cell_payload(t)}, {"expression", expression_to_json(**w)}});
        }
    }
    if (structured) {
        emit({{"cells", cells.size()}, {"generated", missing.empty()}, {"missing", cells_json(missing)},
              {"witnesses", witnesses}});
    } else {
        std::cout << cells.size() << " cells, " << cells.size() - missing.size() << " generated by atoms\n";
        for (const auto& t : missing) std::cout << "not generated: " << t << '\n';
    }
    return missing.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity complexes, their cells and morphisms"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    std::string file;
    std::string require;
    auto* validate_cmd = app.add_subcommand("validate", "Check the axioms and classify");
    validate_cmd->add_option("file", file)->required();
    validate_cmd->add_option("--require", require)->check(CLI::IsMember({"apc", "wpc", "pc"}));

    auto* classify_cmd = app.add_subcommand("classify", "Print the classification");
    classify_cmd->add_option("file", file)->required();

    std::string family;
    std::size_t n = 0;
    std::string out = "-";
    auto* generate_cmd = app.add_subcommand("generate", "Write a standard family as a fixture");
    generate_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"globe", "oriental", "cube"}));
    generate_cmd->add_option("--n", n)->required();
    generate_cmd->add_option("-o,--output", out);

    bool check = false;
    auto* chain_cmd = app.add_subcommand("chain", "Print the chain complex");
    chain_cmd->add_option("file", file)->required();
    chain_cmd->add_flag("--check", check, "Check dd = 0, normality and unitality");

    std::string id;
    auto* atom_cmd = app.add_subcommand("atom", "Print the atom of a generator");
    atom_cmd->add_option("file", file)->required();
    atom_cmd->add_option("id", id, "name or name@dim")->required();

    std::size_t max_dim = 0;
    bool count_only = false;
    auto* cells_cmd = app.add_subcommand("cells", "Enumerate cells");
    cells_cmd->add_option("file", file)->required();
    cells_cmd->add_option("--max-dim", max_dim)->required();
    cells_cmd->add_flag("--count-only", count_only);

    std::string cell;
    std::size_t k = 0;
    std::string sign;
    auto* face_cmd = app.add_subcommand("face", "Source or target of a cell");
    face_cmd->add_option("file", file)->required();
    face_cmd->add_option("--cell", cell)->required();
    face_cmd->add_option("-k", k)->required();
    face_cmd->add_option("--sign", sign)->required()->check(CLI::IsMember({"source", "target"}));

    std::vector<std::string> pair;
    auto* compose_cmd = app.add_subcommand("compose", "Composite of two cells");
    compose_cmd->add_option("file", file)->required();
    compose_cmd->add_option("--cells", pair)->required()->expected(2);
    compose_cmd->add_option("-k", k)->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Excision of a cell into slices");
    decompose_cmd->add_option("file", file)->required();
    decompose_cmd->add_option("--cell", cell)->required();

    auto* morphism_cmd = app.add_subcommand("morphism", "Morphisms");
    morphism_cmd->require_subcommand(1);
    std::string mode;
    auto* mvalidate = morphism_cmd->add_subcommand("validate", "Validate a morphism");
    mvalidate->add_option("file", file)->required();
    mvalidate->add_option("--mode", mode)->check(CLI::IsMember({"additive", "weak_parity"}));
    std::string second;
    auto* mcompose = morphism_cmd->add_subcommand("compose", "Composite g after f");
    mcompose->add_option("first", file)->required();
    mcompose->add_option("second", second)->required();
    mcompose->add_option("-o,--output", out);
    auto* mapply = morphism_cmd->add_subcommand("apply", "Image of a cell");
    mapply->add_option("file", file)->required();
    mapply->add_option("--cell", cell)->required();

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Structure to chain complex and back");
    roundtrip_cmd->add_option("file", file)->required();

    auto* freeness_cmd = app.add_subcommand("freeness", "Check that every cell is generated by atoms");
    freeness_cmd->add_option("file", file)->required();
    freeness_cmd->add_option("--max-dim", max_dim)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    structured = format == "structured";

    try {
        if (*validate_cmd) return cmd_validate(file, require);
        if (*classify_cmd) return cmd_classify(file);
        if (*generate_cmd) return cmd_generate(family, n, out);
        if (*chain_cmd) return cmd_chain(file, check);
        if (*atom_cmd) return cmd_atom(file, id);
        if (*cells_cmd) return cmd_cells(file, max_dim, count_only);
        if (*face_cmd) return cmd_face(file, cell, k, sign);
        if (*compose_cmd) return cmd_compose(file, pair, k);
        if (*decompose_cmd) return cmd_decompose(file, cell);
        if (*mvalidate) return cmd_morphism_validate(file, mode);
        if (*mcompose) return cmd_morphism_compose(file, second, out);
        if (*mapply) return cmd_morphism_apply(file, cell);
        if (*roundtrip_cmd) return cmd_roundtrip(file);
        if (*freeness_cmd) return cmd_freeness(file, max_dim);
    } catch (const CheckFailed& e) {
        std::cout << e.what() << '\n';
        return 1;
    } catch (const EnumerationLimitExceeded& e) {
        std::cout << e.what() << '\n';
        return 1;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
