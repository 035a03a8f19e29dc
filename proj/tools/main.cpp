#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcdiag/arc_number.hpp"
#include "arcdiag/census.hpp"
#include "arcdiag/chord_diagram.hpp"
#include "arcdiag/curves.hpp"
#include "arcdiag/format.hpp"
#include "arcdiag/obstruction.hpp"
#include "arcdiag/realize.hpp"
#include "arcdiag/render.hpp"

namespace {

using arcdiag::ChordDiagram;
using ordered_json = nlohmann::ordered_json;

struct DiagramArgs {
    std::string text;
    std::string file;
    std::string format = "auto";
    bool text_given = false;
};

struct Common {
    bool json = false;
    int guard = -1;
    int threads = 0;
};

arcdiag::DiagramFormat to_format(const std::string& name) {
    if (name == "auto") {
        return arcdiag::DiagramFormat::Auto;
    }
    if (name == "pairing") {
        return arcdiag::DiagramFormat::Pairing;
    }
    if (name == "pairs") {
        return arcdiag::DiagramFormat::Pairs;
    }
    return arcdiag::DiagramFormat::Gauss;
}

std::string slurp(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void add_diagram_options(CLI::App* cmd, DiagramArgs& args) {
    cmd->add_option("diagram", args.text,
                    "Diagram text; read from --file or standard input when omitted");
    cmd->add_option("--file", args.file, "Read the diagram from this file");
    cmd->add_option("--format", args.format, "Input format")
        ->check(CLI::IsMember({"auto", "pairing", "pairs", "gauss"}));
}

ChordDiagram load_diagram(const CLI::App* cmd, const DiagramArgs& args) {
    std::string text;
    if (!args.file.empty()) {
        std::ifstream in(args.file);
        if (!in) {
            throw arcdiag::Error(arcdiag::ErrorKind::IoError, "cannot read '" + args.file + "'");
        }
        text = slurp(in);
    } else if (cmd->count("diagram") > 0) {
        text = args.text;
    } else {
        text = slurp(std::cin);
    }
    return arcdiag::parse_diagram(text, to_format(args.format));
}

int resolve_guard(int flag, int fallback) {
    if (flag >= 0) {
        return flag;
    }
    if (const char* env = std::getenv("ARCNUM_GUARD")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw arcdiag::Error(arcdiag::ErrorKind::ParseError,
                                 "ARCNUM_GUARD must be an integer, got '" + std::string(env) +
                                     "'");
        }
    }
    return fallback;
}

ordered_json chord_list_json(const std::vector<arcdiag::Chord>& chords) {
    ordered_json list = ordered_json::array();
    for (const arcdiag::Chord& c : chords) {
        list.push_back({c.a, c.b});
    }
    return list;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Chord diagram arc numbers, obstructions, and realizability"};
    app.require_subcommand(1);
    int exit_code = 0;

    DiagramArgs d_arc, d_arc2, d_canon, d_obs, d_contains, d_star, d_realize, d_double, d_prop12,
        d_render;
    std::string equiv_lhs, equiv_rhs, equiv_format = "auto";
    Common c_arc, c_arc2, c_canon, c_makec, c_obs, c_contains, c_enum, c_theorem, c_lemmas,
        c_realize, c_prop12;
    int makec_n = 0, contains_n = 0, enum_m = 0, theorem_m = 0, lemmas_m = 0, fb_n = 0,
        prop12_n = 0;
    bool equiv_dihedral = false, render_witness = false;
    std::string render_out;

    const auto add_json = [](CLI::App* cmd, Common& common) {
        cmd->add_flag("--json", common.json, "Emit a JSON object instead of plain text");
    };
    const auto add_guard = [](CLI::App* cmd, Common& common) {
        cmd->add_option("--guard", common.guard,
                        "Override the work guard (also via ARCNUM_GUARD)");
    };
    const auto add_threads = [](CLI::App* cmd, Common& common) {
        cmd->add_option("--threads", common.threads, "Worker threads; 0 means all cores");
    };

    auto* arc = app.add_subcommand("arc", "Arc number of a diagram");
    add_diagram_options(arc, d_arc);
    add_json(arc, c_arc);
    arc->callback([&] {
        const ChordDiagram diagram = load_diagram(arc, d_arc);
        const int value = arcdiag::arc_number(diagram);
        if (c_arc.json) {
            ordered_json out;
            out["m"] = diagram.chord_count();
            out["arc"] = value;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << value << "\n";
        }
    });

    auto* arc2 = app.add_subcommand("arc2", "Cutting gap pair when the arc number is 2");
    add_diagram_options(arc2, d_arc2);
    add_json(arc2, c_arc2);
    arc2->callback([&] {
        const ChordDiagram diagram = load_diagram(arc2, d_arc2);
        const auto pair = arcdiag::find_cutting_pair(diagram);
        if (c_arc2.json) {
            ordered_json out;
            out["m"] = diagram.chord_count();
            out["arc"] = arcdiag::arc_number(diagram);
            if (pair) {
                out["witness"] = {pair->g1, pair->g2};
            }
            std::cout << out.dump() << "\n";
        } else if (pair) {
            std::cout << pair->g1 << " " << pair->g2 << "\n";
        } else {
            std::cout << "none\n";
        }
    });

    auto* canon = app.add_subcommand("canon", "Canonical representative of a diagram's class");
    add_diagram_options(canon, d_canon);
    add_json(canon, c_canon);
    canon->callback([&] {
        const ChordDiagram diagram = load_diagram(canon, d_canon);
        const arcdiag::CanonicalCode code = arcdiag::canonical_code(diagram);
        if (c_canon.json) {
            ordered_json out;
            out["m"] = diagram.chord_count();
            out["code"] = code.code;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << arcdiag::to_pairing_string(arcdiag::diagram_of_code(code)) << "\n";
        }
    });

    auto* equiv = app.add_subcommand("equiv", "Whether two diagrams are equivalent");
    equiv->add_option("lhs", equiv_lhs, "First diagram")->required();
    equiv->add_option("rhs", equiv_rhs, "Second diagram")->required();
    equiv->add_option("--format", equiv_format, "Input format for both diagrams")
        ->check(CLI::IsMember({"auto", "pairing", "pairs", "gauss"}));
    equiv->add_flag("--dihedral", equiv_dihedral, "Also allow reflection");
    equiv->callback([&] {
        const ChordDiagram lhs = arcdiag::parse_diagram(equiv_lhs, to_format(equiv_format));
        const ChordDiagram rhs = arcdiag::parse_diagram(equiv_rhs, to_format(equiv_format));
        if (arcdiag::equivalent(lhs, rhs, equiv_dihedral)) {
            std::cout << "equivalent\n";
        } else {
            std::cout << "different\n";
            exit_code = 1;
        }
    });

    auto* makec = app.add_subcommand("make-c", "Print the obstruction diagram C_{2n+1}");
    makec->add_option("n", makec_n, "Family index, n >= 1")->required();
    add_json(makec, c_makec);
    makec->callback([&] {
        const ChordDiagram diagram = arcdiag::make_c(makec_n);
        if (c_makec.json) {
            ordered_json out;
            out["m"] = diagram.chord_count();
            out["n"] = makec_n;
            out["code"] = arcdiag::canonical_code(diagram).code;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << arcdiag::to_pairs_string(diagram) << "\n";
        }
    });

    auto* obstruction = app.add_subcommand("obstruction", "Extract a minimal obstruction");
    add_diagram_options(obstruction, d_obs);
    add_json(obstruction, c_obs);
    obstruction->callback([&] {
        const ChordDiagram diagram = load_diagram(obstruction, d_obs);
        const auto witness = arcdiag::find_obstruction(diagram);
        if (c_obs.json) {
            ordered_json out;
            out["m"] = diagram.chord_count();
            if (witness) {
                out["n"] = witness->n;
                out["witness"] = chord_list_json(witness->chords);
            }
            std::cout << out.dump() << "\n";
        } else if (witness) {
            std::cout << "n=" << witness->n << ":";
            for (const arcdiag::Chord& c : witness->chords) {
                std::cout << " " << c.a << "-" << c.b;
            }
            std::cout << "\n";
        } else {
            std::cout << "none\n";
        }
    });

    auto* contains = app.add_subcommand("contains", "Whether the diagram contains C_{2n+1}");
    contains->add_option("n", contains_n, "Family index, n >= 1")->required();
    add_diagram_options(contains, d_contains);
    add_guard(contains, c_contains);
    contains->callback([&] {
        const ChordDiagram diagram = load_diagram(contains, d_contains);
        const int guard = resolve_guard(c_contains.guard, 14);
        if (arcdiag::contains_obstruction(diagram, contains_n, guard)) {
            std::cout << "yes\n";
        } else {
            std::cout << "no\n";
            exit_code = 1;
        }
    });

    auto* star = app.add_subcommand("star", "Classify a diagram with all chord lengths m-2");
    add_diagram_options(star, d_star);
    star->callback([&] {
        const ChordDiagram diagram = load_diagram(star, d_star);
        try {
            const arcdiag::StarClassification result = arcdiag::classify_star(diagram);
            if (result.kind == arcdiag::StarClass::ArcTwo) {
                std::cout << "arc-two\n";
            } else {
                std::cout << "equivalent-to-c-m n=" << result.n << "\n";
            }
        } catch (const arcdiag::Error& e) {
            if (e.kind() != arcdiag::ErrorKind::StarViolated) {
                throw;
            }
            std::cout << "violated\n";
            exit_code = 1;
        }
    });

    auto* census = app.add_subcommand("enum", "Census of equivalence classes at m chords");
    census->add_option("m", enum_m, "Chord count")->required();
    add_guard(census, c_enum);
    add_threads(census, c_enum);
    census->callback([&] {
        const int guard = resolve_guard(c_enum.guard, 8);
        for (const arcdiag::CensusEntry& entry :
             arcdiag::classes(enum_m, guard, c_enum.threads)) {
            std::cout << entry.to_json_line() << "\n";
        }
    });

    auto* theorem = app.add_subcommand("verify-theorem", "Sweep all classes up to m chords");
    theorem->add_option("m", theorem_m, "Largest chord count")->required();
    add_guard(theorem, c_theorem);
    add_threads(theorem, c_theorem);
    theorem->callback([&] {
        const int guard = resolve_guard(c_theorem.guard, 7);
        const arcdiag::TheoremReport report =
            arcdiag::verify_theorem(theorem_m, guard, c_theorem.threads);
        for (const std::string& line : report.to_lines()) {
            std::cout << line << "\n";
        }
        if (!report.ok()) {
            exit_code = 1;
        }
    });

    auto* lemmas = app.add_subcommand("verify-lemmas", "Check the structural facts per class");
    lemmas->add_option("m", lemmas_m, "Largest chord count")->required();
    add_guard(lemmas, c_lemmas);
    lemmas->callback([&] {
        const int guard = resolve_guard(c_lemmas.guard, 8);
        const arcdiag::LemmaReport report = arcdiag::verify_lemmas(lemmas_m, guard);
        for (const std::string& line : report.to_lines()) {
            std::cout << line << "\n";
        }
        if (!report.ok()) {
            exit_code = 1;
        }
    });

    auto* realize = app.add_subcommand("realize", "Planar realizability of a diagram");
    add_diagram_options(realize, d_realize);
    add_json(realize, c_realize);
    add_guard(realize, c_realize);
    add_threads(realize, c_realize);
    realize->callback([&] {
        const ChordDiagram diagram = load_diagram(realize, d_realize);
        const int guard = resolve_guard(c_realize.guard, 20);
        if (diagram.empty()) {
            if (c_realize.json) {
                std::cout << ordered_json{{"m", 0}, {"planar", true}}.dump() << "\n";
            } else {
                std::cout << "planar\n";
            }
            return;
        }
        const arcdiag::GenusSearch search =
            arcdiag::genus_min(diagram, guard, c_realize.threads);
        std::string bits;
        for (std::uint8_t choice : search.witness.choices) {
            bits += static_cast<char>('0' + choice);
        }
        if (c_realize.json) {
            ordered_json out;
            out["m"] = diagram.chord_count();
            out["planar"] = search.genus == 0;
            if (search.genus == 0) {
                out["witness"] = bits;
            }
            std::cout << out.dump() << "\n";
        } else if (search.genus == 0) {
            std::cout << "planar\n" << bits << "\n";
        } else {
            std::cout << "genus >= 1 (min genus " << search.genus << ")\n";
        }
        if (search.genus != 0) {
            exit_code = 1;
        }
    });

    auto* gaussfb = app.add_subcommand("gauss-fb", "Forward-back Gauss word for C_{2n+1}");
    gaussfb->add_option("n", fb_n, "Family index, n >= 2")->required();
    gaussfb->callback([&] {
        const arcdiag::GaussWordFB word = arcdiag::forward_back_word(fb_n);
        for (size_t i = 0; i < word.labels.size(); ++i) {
            std::cout << (i ? " " : "") << word.labels[i] + 1;
        }
        std::cout << "\n";
    });

    auto* doubled = app.add_subcommand("double", "Twin-double a diagram");
    add_diagram_options(doubled, d_double);
    doubled->callback([&] {
        const ChordDiagram diagram = load_diagram(doubled, d_double);
        std::cout << arcdiag::to_pairs_string(arcdiag::twin_double(diagram).diagram) << "\n";
    });

    auto* prop12 = app.add_subcommand("verify-prop12", "Four-clause witness check at index n");
    prop12->add_option("n", prop12_n, "Family index, n >= 1")->required();
    add_diagram_options(prop12, d_prop12);
    add_guard(prop12, c_prop12);
    add_threads(prop12, c_prop12);
    prop12->callback([&] {
        const ChordDiagram diagram = load_diagram(prop12, d_prop12);
        const int subset_guard = resolve_guard(c_prop12.guard, 14);
        const int genus_guard = resolve_guard(c_prop12.guard, 20);
        const arcdiag::Prop12Report report =
            arcdiag::verify_prop12(diagram, prop12_n, subset_guard, genus_guard,
                                   c_prop12.threads);
        for (const std::string& line : report.to_lines()) {
            std::cout << line << "\n";
        }
        if (!report.pass()) {
            exit_code = 1;
        }
    });

    auto* render = app.add_subcommand("render", "Render a diagram as SVG");
    add_diagram_options(render, d_render);
    render->add_option("-o,--out", render_out, "Write to this path instead of standard output");
    render->add_flag("--witness", render_witness, "Highlight a minimal obstruction if present");
    render->callback([&] {
        const ChordDiagram diagram = load_diagram(render, d_render);
        std::vector<arcdiag::Chord> highlight;
        if (render_witness) {
            if (const auto witness = arcdiag::find_obstruction(diagram)) {
                highlight = witness->chords;
            }
        }
        const std::string svg = arcdiag::render_svg(diagram, highlight);
        if (render_out.empty()) {
            std::cout << svg;
        } else {
            std::ofstream out(render_out, std::ios::binary);
            if (!out || !(out << svg)) {
                throw arcdiag::Error(arcdiag::ErrorKind::IoError,
                                     "cannot write '" + render_out + "'");
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const arcdiag::Error& e) {
        std::cerr << "arcdiag: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "arcdiag: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

int main(int argc, char** argv) {
    return run(argc, argv);
}
