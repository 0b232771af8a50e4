#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pathgraph/error.hpp"
#include "pathgraph/io.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/realization.hpp"
#include "pathgraph/recognize.hpp"

using namespace pathgraph;

namespace {

enum Exit { kMember = 0, kNonMember = 1, kInputError = 2, kGuard = 3 };

struct Globals {
    std::string format = "edgelist";
    bool gplus = false;
    bool json = false;
    bool quiet = false;
};

std::string read_input(const std::string& path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

Graph load(const Globals& gl, const std::string& path) {
    auto format = format_from_string(gl.format);
    if (!format)
        throw InputError("unknown format " + gl.format);
    Graph g = parse_graph(read_input(path), *format);
    return gl.gplus ? graph_plus(g) : g;
}

void say(const Globals& gl, const std::string& text) {
    if (!gl.quiet)
        std::cout << text;
}

int recognize_cmd(const Globals& gl, const std::string& path, bool certify) {
    if (gl.json || certify) {
        // verdict_json applies G+ itself so the document can record it
        Globals raw = gl;
        raw.gplus = false;
        VerdictOptions opt{path, gl.gplus, false, certify};
        auto doc = verdict_json(load(raw, path), opt);
        say(gl, doc);
        return nlohmann::json::parse(doc)["path_graph"].get<bool>() ? kMember : kNonMember;
    }
    auto g = load(gl, path);
    auto v = recognize_path_graph(g);
    if (v.kind == VerdictKind::NotChordal) {
        std::ostringstream out;
        out << "not chordal; hole";
        for (Vertex x : v.hole)
            out << ' ' << x;
        say(gl, out.str() + "\n");
        return kNonMember;
    }
    if (v.member()) {
        say(gl, "path graph\n");
        return kMember;
    }
    const auto& a = v.separators[static_cast<std::size_t>(v.failing)];
    std::ostringstream out;
    out << "not a path graph; separator";
    for (Vertex x : a.separator())
        out << ' ' << x;
    out << "; obstruction " << to_string(a.obstruction->pattern.family) << '\n';
    say(gl, out.str());
    return kNonMember;
}

int realize_cmd(const Globals& gl, const std::string& path, bool as_dot) {
    auto g = load(gl, path);
    if (!recognize_path_graph(g).member()) {
        say(gl, "not a path graph\n");
        return kNonMember;
    }
    auto t = realize(g);
    if (as_dot) {
        say(gl, dot(t));
    } else {
        nlohmann::json doc;
        nlohmann::json cliques = nlohmann::json::array();
        for (const auto& k : t.cliques)
            cliques.push_back(k.items());
        doc["cliques"] = cliques;
        doc["edges"] = t.edges;
        doc["paths"] = clique_path_tree_to_host(g, t).paths;
        say(gl, doc.dump(2) + "\n");
    }
    return kMember;
}

int oracle_cmd(const Globals& gl, const std::string& path) {
    auto g = load(gl, path);
    if (!is_chordal(g)) {
        say(gl, "not chordal\n");
        return kNonMember;
    }
    auto t = oracle_clique_path_tree(g);
    say(gl, t ? "path graph\n" : "not a path graph\n");
    return t ? kMember : kNonMember;
}

int gen_cmd(const Globals& gl, const std::string& kind, int n, std::uint64_t seed) {
    Graph g;
    if (kind == "path")
        g = gen_path_graph(n, n, seed).first;
    else if (kind == "chordal")
        g = gen_chordal(n, seed);
    else if (kind == "k4hub")
        g = k4_hub_graph();
    else
        throw InputError("unknown kind " + kind);
    if (gl.gplus)
        g = graph_plus(g);
    say(gl, gl.format == "graph6" ? to_graph6(g) + "\n" : to_edgelist(g));
    return kMember;
}

int attachedness_cmd(const Globals& gl, const std::string& path, int index, bool as_dot) {
    auto g = load(gl, path);
    if (!is_chordal(g))
        throw PreconditionError("graph is not chordal");
    auto seps = clique_separators(g);
    if (index < 0 || index >= static_cast<int>(seps.size()))
        throw InputError("separator index out of range (" + std::to_string(seps.size()) + " separators)");
    auto a = analyze_separator(g, seps[static_cast<std::size_t>(index)]);
    if (as_dot) {
        say(gl, dot(a.attachedness));
    } else {
        nlohmann::json doc;
        doc["separator"] = a.separator().items();
        doc["classes"] = a.attachedness.class_members;
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& e : a.attachedness.edges.edges())
            edges.push_back({{"u", e.u}, {"v", e.v}, {"color", to_string(e.color)}});
        doc["edges"] = edges;
        doc["dominance_order"] = a.attachedness.dominance_order();
        say(gl, doc.dump(2) + "\n");
    }
    return a.coloring ? kMember : kNonMember;
}

int obstruction_cmd(const Globals& gl, const std::string& family, int size, bool as_dot) {
    auto f = family_from_string(family);
    if (!f)
        throw InputError("unknown family " + family);
    auto p = build_family(*f, size);
    if (as_dot) {
        say(gl, dot(p));
    } else {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& e : p.pattern.edges())
            edges.push_back({{"u", e.u}, {"v", e.v}, {"color", to_string(e.color)}});
        say(gl, nlohmann::json{{"family", family}, {"order", p.order}, {"vertices", p.pattern.vertex_count()},
                               {"edges", edges}}
                        .dump(2) +
                    "\n");
    }
    return kMember;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path graph recognition and certification"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_option("--format", gl.format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
    app.add_flag("--gplus", gl.gplus, "add a pendant vertex to every vertex first");
    app.add_flag("--json", gl.json, "JSON output");
    app.add_flag("--quiet", gl.quiet, "no output; exit code only");

    std::string path = "-";
    bool as_dot = false;
    int separator = 0, n = 10, size = 1;
    std::uint64_t seed = 0;
    std::string kind = "chordal", family = "w0";

    auto* recognize = app.add_subcommand("recognize", "decide path graph membership");
    recognize->add_option("file", path, "input graph, - for stdin");
    auto* certify = app.add_subcommand("certify", "verdict with per-separator certificates (JSON)");
    certify->add_option("file", path);
    auto* realize_sc = app.add_subcommand("realize", "clique path tree of a path graph");
    realize_sc->add_option("file", path);
    realize_sc->add_flag("--dot", as_dot);
    auto* oracle = app.add_subcommand("oracle", "brute-force verdict over all clique trees");
    oracle->add_option("file", path);
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--kind", kind)->check(CLI::IsMember({"path", "chordal", "k4hub"}));
    gen->add_option("--n", n)->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed);
    auto* attach = app.add_subcommand("attachedness", "attachedness graph at one separator");
    attach->add_option("file", path);
    attach->add_option("--separator", separator);
    attach->add_flag("--dot", as_dot);
    auto* obstruction = app.add_subcommand("obstruction", "print an obstruction pattern");
    obstruction->add_option("--family", family)->check(CLI::IsMember({"w0", "w1", "f", "ftilde", "df"}));
    obstruction->add_option("--size", size);
    obstruction->add_flag("--dot", as_dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*recognize)
            return recognize_cmd(gl, path, false);
        if (*certify)
            return recognize_cmd(gl, path, true);
        if (*realize_sc)
            return realize_cmd(gl, path, as_dot);
        if (*oracle)
            return oracle_cmd(gl, path);
        if (*gen)
            return gen_cmd(gl, kind, n, seed);
        if (*attach)
            return attachedness_cmd(gl, path, separator, as_dot);
        if (*obstruction)
            return obstruction_cmd(gl, family, size, as_dot);
    } catch (const GuardRefusal& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kGuard;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNonMember;
    }
    return kInputError;
}
