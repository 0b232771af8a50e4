#include <doctest.h>

#include <limits>

#include "pathgraph/chordal.hpp"
#include "pathgraph/decomposition.hpp"
#include "pathgraph/error.hpp"
#include "pathgraph/oracle.hpp"
#include "support.hpp"

using namespace pathgraph;
using namespace support;

namespace {

using Edges = std::vector<std::pair<int, int>>;

// Subsets of k-1 edges among all clique pairs that form a tree.
std::vector<Edges> bf_labeled_trees(int k) {
    Edges slots;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            slots.emplace_back(a, b);
    std::vector<Edges> out;
    const auto total = 1u << slots.size();
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        if (__builtin_popcount(bits) != k - 1)
            continue;
        std::vector<int> parent(static_cast<std::size_t>(k));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        Edges es;
        bool acyclic = true;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (bits >> s & 1) {
                auto [a, b] = slots[s];
                if (find(a) == find(b))
                    acyclic = false;
                parent[static_cast<std::size_t>(find(a))] = find(b);
                es.push_back(slots[s]);
            }
        if (acyclic)
            out.push_back(es);
    }
    return out;
}

// For each vertex, the nodes holding it must be a connected set of max degree 2.
bool bf_is_path_tree(const Graph& gr, const std::vector<VertexSet>& cliques, const Edges& es) {
    for (Vertex v = 0; v < gr.vertex_count(); ++v) {
        std::vector<int> nodes;
        for (std::size_t c = 0; c < cliques.size(); ++c)
            if (cliques[c].contains(v))
                nodes.push_back(static_cast<int>(c));
        auto in = [&](int x) { return std::find(nodes.begin(), nodes.end(), x) != nodes.end(); };
        int inner = 0;
        std::map<int, int> deg;
        for (auto [a, b] : es)
            if (in(a) && in(b)) {
                ++inner;
                ++deg[a];
                ++deg[b];
            }
        if (inner + 1 != static_cast<int>(nodes.size()))
            return false; // a forest inside a tree: connected iff edges = nodes - 1
        for (auto [x, dg] : deg)
            if (dg > 2)
                return false;
    }
    return true;
}

} // namespace

TEST_CASE("rng wraps the 64-bit mersenne twister") {
    Rng rng(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i)
        x = rng.below(std::numeric_limits<std::uint64_t>::max());
    CHECK(x == 9981545732273789042ull);
    CHECK_THROWS_AS(rng.below(0), InputError);

    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i)
        CHECK(a.uniform(-3, 9) == b.uniform(-3, 9));

    Rng r(1);
    std::array<int, 6> counts{};
    for (int i = 0; i < 60000; ++i)
        ++counts[r.below(6)];
    for (int c : counts)
        CHECK(std::abs(c - 10000) < 500);
}

TEST_CASE("k4-hub has no clique path tree among its 16 labeled trees") {
    auto hub = k4_hub_graph();
    auto cliques = maximal_cliques(hub);
    REQUIRE(cliques.size() == 4);
    auto trees = bf_labeled_trees(4);
    CHECK(trees.size() == 16);
    for (const auto& es : trees)
        CHECK_FALSE(bf_is_path_tree(hub, cliques, es));
    CHECK_FALSE(oracle_clique_path_tree(hub).has_value());
}

TEST_CASE("lettered graph oracle tree") {
    auto lg = lettered_graph();
    auto t = oracle_clique_path_tree(lg);
    REQUIRE(t.has_value());
    CHECK(is_clique_path_tree(lg, *t));
    CHECK(bf_is_path_tree(lg, t->cliques, t->edges));
}

TEST_CASE("tree oracle edge cases") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto t = oracle_clique_path_tree(k3);
    REQUIRE(t.has_value());
    CHECK(t->edges.empty());
    CHECK_THROWS_AS(oracle_clique_path_tree(Graph(2)), PreconditionError);
    // a path on 11 vertices has 10 maximal cliques
    std::vector<Edge> es;
    for (int v = 0; v + 1 < 11; ++v)
        es.emplace_back(v, v + 1);
    CHECK_THROWS_AS(oracle_clique_path_tree(Graph(11, es)), GuardRefusal);
}

TEST_CASE("coloring oracle") {
    auto m = quotient(gamma_components(lettered_graph(), {b, c, e}));
    auto col = oracle_strong_coloring(m);
    REQUIRE(col.has_value());
    CHECK(*col == std::vector<int>{1, 2, 3});
    CHECK_FALSE(oracle_strong_coloring(quotient(gamma_components(k4_hub_graph(), {1, 2, 3, 4}))).has_value());
    auto big = AttachednessGraph::from_relations(kColoringOracleGuard + 1, {}, {});
    CHECK_THROWS_AS(oracle_strong_coloring(big), GuardRefusal);
}

TEST_CASE("property: tree oracle agrees with edge-subset enumeration") {
    int with_tree = 0, without = 0;
    for (const auto& gr : corpus(300, 2000)) {
        auto cliques = maximal_cliques(gr);
        if (cliques.size() > 6)
            continue;
        bool any = false;
        for (const auto& es : bf_labeled_trees(static_cast<int>(cliques.size())))
            if (bf_is_path_tree(gr, cliques, es)) {
                any = true;
                break;
            }
        auto t = oracle_clique_path_tree(gr);
        CHECK(t.has_value() == any);
        if (t) {
            CHECK(t->cliques == cliques);
            CHECK(bf_is_path_tree(gr, cliques, t->edges));
            ++with_tree;
        } else {
            ++without;
        }
    }
    CHECK(with_tree > 0);
    CHECK(without > 0);
}

TEST_CASE("generators") {
    Rng rng(8);
    for (int nodes = 1; nodes <= 12; ++nodes) {
        auto t = random_tree(nodes, rng);
        CHECK(is_tree(nodes, t));
    }
    CHECK_THROWS_AS(random_tree(0, rng), InputError);
    CHECK_THROWS_AS(gen_chordal(0, 1), InputError);
    CHECK_THROWS_AS(gen_path_graph(0, 3, 1), InputError);

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto gr = gen_chordal(3 + static_cast<int>(seed % 10), seed);
        CHECK(gr.vertex_count() == 3 + static_cast<int>(seed % 10));
        CHECK(is_connected(gr));
        CHECK_FALSE(bf_has_hole(gr));
        CHECK(gen_chordal(gr.vertex_count(), seed) == gr);

        auto [pg, host] = gen_path_graph(4 + static_cast<int>(seed % 6), 3 + static_cast<int>(seed % 7), seed);
        CHECK(is_connected(pg));
        CHECK(is_tree(host.node_count, host.tree_edges));
        CHECK(intersection_graph(host) == pg);
        for (const auto& p : host.paths) {
            // consecutive nodes are tree edges and no node repeats
            std::set<int> seen(p.begin(), p.end());
            CHECK(seen.size() == p.size());
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                auto e = std::minmax(p[i], p[i + 1]);
                CHECK(std::count(host.tree_edges.begin(), host.tree_edges.end(), std::pair<int, int>(e)) == 1);
            }
        }
    }
}

TEST_CASE("builtin graphs") {
    auto hub = k4_hub_graph();
    CHECK(hub.vertex_count() == 7);
    CHECK(hub.edge_count() == 12);
    CHECK(maximal_cliques(hub) == std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3, 4}, {1, 3, 5}, {1, 4, 6}});
    auto star = trace_star_graph(3, {{0}, {1, 2}});
    CHECK(star.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 4}});
}
