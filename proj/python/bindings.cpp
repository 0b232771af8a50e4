#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathgraph/chordal.hpp"
#include "pathgraph/decomposition.hpp"
#include "pathgraph/error.hpp"
#include "pathgraph/io.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/realization.hpp"
#include "pathgraph/recognize.hpp"

namespace py = pybind11;
using namespace pathgraph;

namespace {

std::vector<std::vector<int>> sets(const std::vector<VertexSet>& xs) {
    std::vector<std::vector<int>> out;
    for (const auto& x : xs)
        out.push_back(x.items());
    return out;
}

py::tuple tree_tuple(const CliqueTree& t) { return py::make_tuple(sets(t.cliques), t.edges); }

Format parse_format(const std::string& name) {
    auto f = format_from_string(name);
    if (!f)
        throw InputError("unknown format " + name);
    return *f;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Path graph recognition with coloring and obstruction certificates.";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InputError>(m, "InputError", base);
    py::register_exception<PreconditionError>(m, "PreconditionError", base);
    py::register_exception<GuardRefusal>(m, "GuardRefusal", base);
    py::register_exception<RealizationError>(m, "RealizationError", base);
    py::register_exception<GenerationError>(m, "GenerationError", base);
    py::register_exception<InvariantError>(m, "InvariantError", base);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + ", " + std::to_string(g.edge_count()) + " edges)";
        });

    m.def("parse_graph", [](const std::string& text, const std::string& format) {
        return parse_graph(text, parse_format(format));
    }, py::arg("text"), py::arg("format") = "edgelist");
    m.def("to_edgelist", &to_edgelist);
    m.def("to_graph6", &to_graph6);
    m.def("graph_plus", &graph_plus);

    m.def("hole", [](const Graph& g) -> std::optional<std::vector<Vertex>> {
        auto r = peo_or_hole(g);
        if (auto* h = std::get_if<HoleCertificate>(&r))
            return h->cycle;
        return std::nullopt;
    }, "A chordless cycle of length >= 4, or None for chordal graphs.");
    m.def("is_chordal", &is_chordal);
    m.def("maximal_cliques", [](const Graph& g) { return sets(maximal_cliques(g)); });
    m.def("clique_separators", [](const Graph& g) { return sets(clique_separators(g)); });

    m.def("is_path_graph", [](const Graph& g) { return recognize_path_graph(g).member(); });
    m.def("is_directed_path_graph", [](const Graph& g) { return recognize_directed_path_graph(g).member(); });
    m.def("verdict_json", [](const Graph& g, bool gplus, bool realization, bool detail) {
        return verdict_json(g, VerdictOptions{"python", gplus, realization, detail});
    }, py::arg("graph"), py::arg("gplus") = false, py::arg("realization") = false, py::arg("detail") = false);

    m.def("realize", [](const Graph& g) { return tree_tuple(realize(g)); },
          "(cliques, edges) of a validated clique path tree.");
    m.def("host_paths", [](const Graph& g) {
        auto t = realize(g);
        return clique_path_tree_to_host(g, t).paths;
    });
    m.def("oracle_clique_path_tree", [](const Graph& g) -> std::optional<py::tuple> {
        if (auto t = oracle_clique_path_tree(g))
            return tree_tuple(*t);
        return std::nullopt;
    });

    m.def("gen_chordal", &gen_chordal, py::arg("n"), py::arg("seed"));
    m.def("gen_path_graph", [](int nodes, int paths, std::uint64_t seed) {
        return gen_path_graph(nodes, paths, seed).first;
    }, py::arg("tree_nodes"), py::arg("paths"), py::arg("seed"));
    m.def("k4_hub_graph", &k4_hub_graph);
    m.def("lettered_graph", &lettered_graph);

    m.def("family_dot", [](const std::string& name, int size) {
        auto f = family_from_string(name);
        if (!f)
            throw InputError("unknown family " + name);
        return dot(build_family(*f, size));
    });
}
