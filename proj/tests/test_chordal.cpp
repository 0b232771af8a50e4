#include <doctest.h>

#include "pathgraph/chordal.hpp"
#include "pathgraph/error.hpp"
#include "pathgraph/oracle.hpp"
#include "support.hpp"

using namespace pathgraph;
using namespace support;

namespace {

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

int index_of(const std::vector<VertexSet>& cliques, const VertexSet& k) {
    return static_cast<int>(std::find(cliques.begin(), cliques.end(), k) - cliques.begin());
}

} // namespace

TEST_CASE("C4 yields the hole 0-1-2-3") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto r = peo_or_hole(c4);
    REQUIRE(std::holds_alternative<HoleCertificate>(r));
    CHECK(std::get<HoleCertificate>(r).cycle == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_FALSE(is_chordal(c4));
}

TEST_CASE("complete graphs accept every order") {
    auto k5 = complete(5);
    CHECK(is_chordal(k5));
    std::vector<Vertex> order{3, 1, 4, 0, 2};
    CHECK(is_perfect_elimination_order(k5, order));
}

TEST_CASE("lettered graph graph is chordal") {
    auto lg = lettered_graph();
    auto r = peo_or_hole(lg);
    REQUIRE(std::holds_alternative<EliminationOrder>(r));
    CHECK(is_perfect_elimination_order(lg, std::get<EliminationOrder>(r).order));
}

TEST_CASE("maximal cliques") {
    CHECK(maximal_cliques(complete(3)) == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(maximal_cliques(Graph(3, {{0, 1}, {1, 2}})) == std::vector<VertexSet>{{0, 1}, {1, 2}});
    // abc, bce, cde, beg, bfg, egh
    const std::vector<VertexSet> labels{{a, b, c}, {b, c, e}, {c, d, e}, {b, e, g}, {b, f, g}, {e, g, h}};
    std::vector<VertexSet> expected = labels;
    std::sort(expected.begin(), expected.end());
    CHECK(maximal_cliques(lettered_graph()) == expected);
    CHECK_THROWS_AS(maximal_cliques(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), PreconditionError);
}

TEST_CASE("clique trees") {
    auto two = clique_tree(Graph(3, {{0, 1}, {1, 2}}));
    CHECK(two.edges == std::vector<std::pair<int, int>>{{0, 1}});
    auto single = clique_tree(complete(4));
    CHECK(single.cliques.size() == 1);
    CHECK(single.edges.empty());
    auto lg = lettered_graph();
    auto t = clique_tree(lg);
    CHECK(t.cliques.size() == 6);
    CHECK(is_clique_tree(lg, t));
    CHECK_THROWS_AS(clique_tree(Graph(2)), PreconditionError);
}

TEST_CASE("clique path tree check") {
    auto k3 = complete(3);
    CHECK(is_clique_path_tree(k3, CliqueTree{{{0, 1, 2}}, {}}));

    auto lg = lettered_graph();
    CliqueTree t{maximal_cliques(lg), {}};
    auto idx = [&](VertexSet k) { return index_of(t.cliques, k); };
    auto link = [&](VertexSet x, VertexSet y) {
        t.edges.emplace_back(std::min(idx(x), idx(y)), std::max(idx(x), idx(y)));
    };
    link({a, b, c}, {b, c, e});
    link({c, d, e}, {b, c, e});
    link({b, c, e}, {b, e, g});
    link({b, e, g}, {b, f, g});
    link({b, e, g}, {e, g, h});
    std::sort(t.edges.begin(), t.edges.end());
    CHECK(is_clique_path_tree(lg, t));

    auto hub = k4_hub_graph();
    CliqueTree star{maximal_cliques(hub), {}};
    const int centre = index_of(star.cliques, {1, 2, 3, 4});
    for (int k = 0; k < 4; ++k)
        if (k != centre)
            star.edges.emplace_back(std::min(k, centre), std::max(k, centre));
    std::sort(star.edges.begin(), star.edges.end());
    CHECK(is_clique_tree(hub, star));
    CHECK_FALSE(is_clique_path_tree(hub, star));

    CHECK_THROWS_AS(is_clique_path_tree(hub, CliqueTree{{{1, 2, 3, 4}}, {}}), InputError);
}

TEST_CASE("is_tree and is_hole") {
    std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}};
    CHECK(is_tree(3, path));
    std::vector<std::pair<int, int>> cyc{{0, 1}, {1, 2}, {0, 2}};
    CHECK_FALSE(is_tree(4, cyc));
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    std::vector<Vertex> hole{0, 1, 2, 3, 4};
    CHECK(is_hole(c5, hole));
    std::vector<Vertex> tri{0, 1, 2};
    CHECK_FALSE(is_hole(c5, tri));
}

TEST_CASE("property: peo_or_hole matches brute force on every graph with at most 7 vertices") {
    long long checked = 0;
    for (int n = 0; n <= 7; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                slots.emplace_back(u, v);
        const std::uint64_t total = 1ull << slots.size();
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            std::vector<Edge> edges;
            std::fill(adj.begin(), adj.end(), 0u);
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (bits >> s & 1) {
                    edges.push_back(slots[s]);
                    adj[static_cast<std::size_t>(slots[s].first)] |= 1u << slots[s].second;
                    adj[static_cast<std::size_t>(slots[s].second)] |= 1u << slots[s].first;
                }
            Graph gr(n, edges);
            auto r = peo_or_hole(gr);
            const bool hole = bf_has_hole(adj, n);
            if (hole != std::holds_alternative<HoleCertificate>(r)) {
                FAIL("chordality disagrees with brute force");
            }
            if (auto* cert = std::get_if<HoleCertificate>(&r)) {
                if (!is_hole(gr, cert->cycle))
                    FAIL("invalid hole certificate");
            } else if (!is_perfect_elimination_order(gr, std::get<EliminationOrder>(r).order)) {
                FAIL("invalid elimination order");
            }
            ++checked;
        }
    }
    CHECK(checked == 1 + 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152);
}

TEST_CASE("property: cliques and clique trees on the chordal corpus") {
    for (const auto& gr : corpus(400)) {
        auto cliques = maximal_cliques(gr);
        CHECK(cliques == bf_maximal_cliques(gr));
        CHECK(static_cast<int>(cliques.size()) <= gr.vertex_count());
        auto t = clique_tree(gr);
        CHECK(is_clique_tree(gr, t));
        if (is_clique_path_tree(gr, t))
            CHECK(is_clique_tree(gr, t));
    }
}
