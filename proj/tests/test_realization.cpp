#include <doctest.h>

#include "pathgraph/chordal.hpp"
#include "pathgraph/error.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/realization.hpp"
#include "pathgraph/recognize.hpp"
#include "support.hpp"

using namespace pathgraph;
using namespace support;

TEST_CASE("single clique and short path") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto t = realize(k3);
    CHECK(t.cliques == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(t.edges.empty());
    auto host = clique_path_tree_to_host(k3, t);
    CHECK(host.node_count == 1);
    CHECK(host.paths == std::vector<std::vector<int>>{{0}, {0}, {0}});

    Graph p3(3, {{0, 1}, {1, 2}});
    auto tp = realize(p3);
    CHECK(tp.edges == std::vector<std::pair<int, int>>{{0, 1}});
    auto hp = clique_path_tree_to_host(p3, tp);
    CHECK(hp.paths[1].size() == 2);
    CHECK(intersection_graph(hp) == p3);
}

TEST_CASE("lettered graph realization") {
    auto lg = lettered_graph();
    auto t = realize(lg);
    CHECK(t.cliques.size() == 6);
    CHECK(is_clique_path_tree(lg, t));
    auto host = clique_path_tree_to_host(lg, t);
    CHECK(host.node_count == 6);
    CHECK(host.paths.size() == 8);
    for (Vertex v : {a, d, f})
        CHECK(host.paths[static_cast<std::size_t>(v)].size() == 1);
    CHECK(host.paths[g].size() == 3);
    CHECK(intersection_graph(host) == lg);
}

TEST_CASE("realization failures and preconditions") {
    CHECK_THROWS_AS(realize(k4_hub_graph()), RealizationError);
    CHECK_THROWS_AS(realize(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), PreconditionError);
    auto hub = k4_hub_graph();
    CliqueTree star{maximal_cliques(hub), {{0, 1}, {1, 2}, {1, 3}}};
    CHECK_THROWS_AS(clique_path_tree_to_host(hub, star), PreconditionError);
}

TEST_CASE("disconnected input") {
    Graph two(5, {{0, 1}, {1, 2}, {3, 4}});
    auto t = realize(two);
    CHECK(is_clique_path_tree(two, t));
    CHECK(intersection_graph(clique_path_tree_to_host(two, t)) == two);
}

TEST_CASE("property: realize succeeds on every accepted corpus graph") {
    int accepted = 0;
    for (const auto& gr : corpus(500, 7000)) {
        if (!recognize_path_graph(gr).member()) {
            CHECK_THROWS_AS(realize(gr), RealizationError);
            continue;
        }
        ++accepted;
        auto t = realize(gr);
        CHECK(is_clique_path_tree(gr, t));
        CHECK(intersection_graph(clique_path_tree_to_host(gr, t)) == gr);
    }
    CHECK(accepted > 0);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto [pg, host] = gen_path_graph(6 + static_cast<int>(seed % 5), 5 + static_cast<int>(seed % 8), seed);
        auto t = realize(pg);
        CHECK(is_clique_path_tree(pg, t));
    }
}
