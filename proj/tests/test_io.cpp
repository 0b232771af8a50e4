#include <doctest.h>

#include <json.hpp>

#include "pathgraph/error.hpp"
#include "pathgraph/io.hpp"
#include "pathgraph/oracle.hpp"
#include "support.hpp"

using namespace pathgraph;
using namespace support;
using nlohmann::json;

namespace {

Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.emplace_back(u, v);
    return Graph(n, es);
}

int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("edge list parsing") {
    CHECK(parse_graph("p 2\n0 1\n", Format::EdgeList) == complete(2));
    CHECK(parse_graph("# comment\n0 1\n1 2 # trailing\n\n1 0\n", Format::EdgeList) == Graph(3, {{0, 1}, {1, 2}}));
    CHECK(parse_graph("p 4\n0 1\n", Format::EdgeList).vertex_count() == 4);
    CHECK(parse_graph("", Format::EdgeList).vertex_count() == 0);

    auto expect_line = [](const char* text, const char* where) {
        try {
            parse_graph(text, Format::EdgeList);
            FAIL("no error for " << text);
        } catch (const InputError& err) {
            CHECK(std::string(err.what()).find(where) != std::string::npos);
        }
    };
    expect_line("0 0\n", "line 1");
    expect_line("0 1\n1 x\n", "line 2");
    expect_line("0 1\n-1 2\n", "line 2");
    expect_line("p 2\n0 5\n", "line 2");
    expect_line("0 1 2\n", "line 1");
}

TEST_CASE("lettered graph edge list") {
    const char* text = "0 1\n0 2\n1 2\n1 4\n2 4\n2 3\n3 4\n1 6\n4 6\n1 5\n5 6\n6 7\n4 7\n";
    auto gr = parse_graph(text, Format::EdgeList);
    CHECK(gr == lettered_graph());
    CHECK(maximal_cliques(gr).size() == 6);
}

TEST_CASE("graph6") {
    CHECK(parse_graph("C~", Format::Graph6) == complete(4));
    CHECK(parse_graph("A_", Format::Graph6) == complete(2));
    CHECK(parse_graph(">>graph6<<Bw\n", Format::Graph6) == complete(3));
    CHECK(parse_graph("?", Format::Graph6).vertex_count() == 0);
    auto petersen = parse_graph("IheA@GUAo", Format::Graph6);
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v)
        CHECK(petersen.degree(v) == 3);
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(to_graph6(petersen) == "IheA@GUAo");
    CHECK_THROWS_AS(parse_graph("C~~", Format::Graph6), InputError);
    CHECK_THROWS_AS(parse_graph("C\x7f", Format::Graph6), InputError);
    CHECK(format_from_string("graph6") == Format::Graph6);
    CHECK(format_from_string("edgelist") == Format::EdgeList);
    CHECK_FALSE(format_from_string("dimacs").has_value());
}

TEST_CASE("property: round trips") {
    Rng rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        auto gr = random_graph(rng.uniform(0, 70), rng, rng.uniform(0, 100));
        CHECK(parse_graph(to_edgelist(gr), Format::EdgeList) == gr);
        CHECK(parse_graph(to_graph6(gr), Format::Graph6) == gr);
    }
}

TEST_CASE("verdict json") {
    auto atom = json::parse(verdict_json(complete(3), {"k3", false, false, false}));
    CHECK(atom["chordal"] == true);
    CHECK(atom["path_graph"] == true);
    CHECK(atom["separators"].empty());
    CHECK_FALSE(atom.contains("hole"));

    auto c4 = json::parse(verdict_json(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), {"c4", false, false, false}));
    CHECK(c4["chordal"] == false);
    CHECK(c4["hole"] == json::array({0, 1, 2, 3}));

    auto hub = json::parse(verdict_json(k4_hub_graph(), {"hub", false, false, true}));
    CHECK(hub["path_graph"] == false);
    CHECK(hub["directed_path_graph"] == false);
    REQUIRE(hub["separators"].size() == 1);
    const auto& sep = hub["separators"][0];
    CHECK(sep["obstruction"]["family"] == "full_antipodal_triangle");
    CHECK(sep["obstruction"]["witness"] == 1);
    CHECK(sep["refutation"]["witness"] == 1);
    CHECK(hub["failing_separator"] == 0);

    auto plus = json::parse(verdict_json(k4_hub_graph(), {"hub", true, false, false}));
    CHECK(plus["input"]["gplus"] == true);
    CHECK(plus["input"]["vertices"] == 14);
    CHECK(plus["separators"][plus["failing_separator"].get<int>()]["induced_obstruction"]["family"] == "w0");

    auto lg = json::parse(verdict_json(lettered_graph(), {"lg", false, true, true}));
    CHECK(lg["path_graph"] == true);
    CHECK(lg["directed_path_graph"] == false);
    CHECK(lg["separators"].size() == 2);
    CHECK(lg["separators"][0]["coloring"] == json::array({1, 2, 3}));
    CHECK(lg["realization"]["valid"] == true);

    // byte-identical across runs
    CHECK(verdict_json(lettered_graph(), {"lg", false, true, true}) ==
          verdict_json(lettered_graph(), {"lg", false, true, true}));
}

TEST_CASE("dot output") {
    auto w0 = dot(build_family(Family::W0, 1));
    CHECK(count(w0, "[style=dotted]") == 3);
    CHECK(count(w0, " -- ") == 6);

    auto two = dot(AttachednessGraph::from_relations(2, std::vector<std::pair<int, int>>{{0, 1}}, {}));
    CHECK(count(two, "[label=") == 2);
    CHECK(count(two, " -- ") == 1);
    CHECK(count(two, "dotted") == 0);

    auto tri = dot(quotient(gamma_components(lettered_graph(), {b, c, e})));
    CHECK(count(tri, " -- ") == 3);
    CHECK(count(tri, "dotted") == 0);

    auto tree = dot(clique_tree(lettered_graph()));
    CHECK(count(tree, " -- ") == 5);
    CHECK(tree.rfind("graph clique_tree {", 0) == 0);
}
