#include "pathgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

#include "pathgraph/error.hpp"

namespace pathgraph {

namespace {

std::size_t at(int x) { return static_cast<std::size_t>(x); }

std::vector<std::pair<int, int>> decode_pruefer(const std::vector<int>& seq, int nodes) {
    std::vector<int> degree(at(nodes), 1);
    for (int x : seq)
        ++degree[at(x)];
    std::vector<std::pair<int, int>> edges;
    for (int x : seq)
        for (int leaf = 0; leaf < nodes; ++leaf)
            if (degree[at(leaf)] == 1) {
                edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                --degree[at(leaf)];
                --degree[at(x)];
                break;
            }
    int u = -1, w = -1;
    for (int x = 0; x < nodes; ++x)
        if (degree[at(x)] == 1)
            (u < 0 ? u : w) = x;
    edges.emplace_back(u, w);
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Each vertex's clique set (as a bitmask) must induce a path.
bool path_tree_masks(const std::vector<std::uint32_t>& masks, const std::vector<std::pair<int, int>>& edges,
                     std::vector<std::uint32_t>& adj) {
    std::fill(adj.begin(), adj.end(), 0u);
    for (auto [a, b] : edges) {
        adj[at(a)] |= 1u << b;
        adj[at(b)] |= 1u << a;
    }
    for (std::uint32_t mask : masks) {
        int inner = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const int c = std::countr_zero(rest);
            const int d = std::popcount(adj[at(c)] & mask);
            if (d > 2)
                return false;
            inner += d;
        }
        if (inner / 2 + 1 != std::popcount(mask))
            return false;
    }
    return true;
}

std::vector<int> tree_path(int nodes, const std::vector<std::pair<int, int>>& edges, int from, int to) {
    std::vector<std::vector<int>> adj(at(nodes));
    for (auto [a, b] : edges) {
        adj[at(a)].push_back(b);
        adj[at(b)].push_back(a);
    }
    std::vector<int> parent(at(nodes), -2);
    std::deque<int> queue{from};
    parent[at(from)] = -1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj[at(x)])
            if (parent[at(y)] == -2) {
                parent[at(y)] = x;
                queue.push_back(y);
            }
    }
    std::vector<int> path;
    for (int x = to; x >= 0; x = parent[at(x)])
        path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

Graph intersection_of(int n, const std::vector<std::vector<int>>& node_sets) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& a = node_sets[at(u)];
            const auto& b = node_sets[at(v)];
            bool meet = std::any_of(a.begin(), a.end(), [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); });
            if (meet)
                edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

bool extend_coloring(const AttachednessGraph& m, const std::vector<std::vector<int>>& neighborhoods, int c, int used,
                     std::vector<int>& colors) {
    const int n = m.class_count();
    if (c == n)
        return true;
    for (int col = 1; col <= used + 1 && col <= n; ++col) {
        colors[at(c)] = col;
        bool ok = true;
        for (int d = 0; d < c && ok; ++d)
            ok = !(m.is_antipodal(c, d) && colors[at(d)] == col);
        for (std::size_t k = 0; k < neighborhoods.size() && ok; ++k) {
            const auto& nv = neighborhoods[k];
            if (!std::binary_search(nv.begin(), nv.end(), c))
                continue;
            std::set<int> seen;
            for (int d : nv)
                if (d <= c)
                    seen.insert(colors[at(d)]);
            ok = seen.size() <= 2;
        }
        if (ok && extend_coloring(m, neighborhoods, c + 1, std::max(used, col), colors))
            return true;
    }
    colors[at(c)] = 0;
    return false;
}

} // namespace

std::optional<CliqueTree> oracle_clique_path_tree(const Graph& g) {
    if (!is_connected(g))
        throw PreconditionError("tree oracle requires a connected graph");
    auto cliques = maximal_cliques(g);
    const int k = static_cast<int>(cliques.size());
    if (k > kTreeOracleGuard)
        throw GuardRefusal("tree oracle limited to " + std::to_string(kTreeOracleGuard) + " maximal cliques");
    CliqueTree t{cliques, {}};
    if (k == 1)
        return t;
    std::set<std::uint32_t> distinct;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::uint32_t mask = 0;
        for (int c = 0; c < k; ++c)
            if (cliques[at(c)].contains(v))
                mask |= 1u << c;
        distinct.insert(mask);
    }
    const std::vector<std::uint32_t> masks(distinct.begin(), distinct.end());
    std::vector<std::uint32_t> adj(at(k));
    std::vector<int> seq(at(k - 2), 0);
    while (true) {
        auto edges = decode_pruefer(seq, k);
        if (path_tree_masks(masks, edges, adj)) {
            t.edges = std::move(edges);
            return t;
        }
        int pos = k - 3;
        while (pos >= 0 && seq[at(pos)] == k - 1)
            seq[at(pos--)] = 0;
        if (pos < 0)
            return std::nullopt;
        ++seq[at(pos)];
    }
}

std::optional<std::vector<int>> oracle_strong_coloring(const AttachednessGraph& m) {
    if (m.class_count() > kColoringOracleGuard)
        throw GuardRefusal("coloring oracle limited to " + std::to_string(kColoringOracleGuard) + " classes");
    std::vector<std::vector<int>> neighborhoods;
    for (const auto& [v, list] : m.neighbor_map)
        if (list.size() >= 3)
            neighborhoods.push_back(list);
    std::vector<int> colors(at(m.class_count()), 0);
    if (extend_coloring(m, neighborhoods, 0, 0, colors))
        return colors;
    return std::nullopt;
}

Graph intersection_graph(const HostRealization& h) {
    return intersection_of(static_cast<int>(h.paths.size()), h.paths);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0)
        throw InputError("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do
        x = engine_();
    while (x >= limit);
    return x % bound;
}

std::vector<std::pair<int, int>> random_tree(int nodes, Rng& rng) {
    if (nodes < 1)
        throw InputError("tree needs at least one node");
    if (nodes == 1)
        return {};
    if (nodes == 2)
        return {{0, 1}};
    std::vector<int> seq(at(nodes - 2));
    for (auto& x : seq)
        x = rng.uniform(0, nodes - 1);
    return decode_pruefer(seq, nodes);
}

std::pair<Graph, HostRealization> gen_path_graph(int tree_nodes, int paths, std::uint64_t seed) {
    if (tree_nodes < 1 || paths < 1)
        throw InputError("sizes must be positive");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        HostRealization h;
        h.node_count = tree_nodes;
        h.tree_edges = random_tree(tree_nodes, rng);
        for (int p = 0; p < paths; ++p)
            h.paths.push_back(tree_path(tree_nodes, h.tree_edges, rng.uniform(0, tree_nodes - 1),
                                        rng.uniform(0, tree_nodes - 1)));
        Graph g = intersection_graph(h);
        if (is_connected(g))
            return {std::move(g), std::move(h)};
    }
    throw GenerationError("no connected path graph within the retry budget");
}

Graph gen_chordal(int n, std::uint64_t seed) {
    if (n < 1)
        throw InputError("n must be positive");
    Rng rng(seed);
    // Each new vertex is made simplicial: its neighbourhood is a random clique
    // grown around a random earlier vertex. Reverse insertion order is a PEO.
    std::vector<std::vector<char>> adj(at(n), std::vector<char>(at(n), 0));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::vector<int> clique{rng.uniform(0, v - 1)};
        std::vector<int> candidates;
        for (int w = 0; w < v; ++w)
            if (adj[at(clique[0])][at(w)])
                candidates.push_back(w);
        const auto keep = rng.below(4); // chance out of 4 to extend by each candidate
        while (!candidates.empty()) {
            const auto pick = rng.below(candidates.size());
            const int w = candidates[pick];
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
            const bool fits = std::all_of(clique.begin(), clique.end(), [&](int x) { return adj[at(x)][at(w)]; });
            if (fits && rng.below(4) <= keep)
                clique.push_back(w);
        }
        for (int x : clique) {
            adj[at(x)][at(v)] = adj[at(v)][at(x)] = 1;
            edges.emplace_back(x, v);
        }
    }
    return Graph(n, edges);
}

Graph k4_hub_graph() {
    return Graph(7, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {0, 1}, {0, 2}, {5, 1}, {5, 3}, {6, 1}, {6, 4}});
}

Graph lettered_graph() {
    // a b c d e f g h
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 4}, {2, 3}, {3, 4},
                                  {1, 6}, {4, 6}, {1, 5}, {5, 6}, {6, 7}, {4, 7}};
    return Graph(8, edges, {"a", "b", "c", "d", "e", "f", "g", "h"});
}

Graph trace_star_graph(int q, const std::vector<VertexSet>& traces) {
    std::vector<Edge> edges;
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            edges.emplace_back(a, b);
    int next = q;
    for (const auto& t : traces) {
        for (Vertex v : t)
            edges.emplace_back(v, next);
        ++next;
    }
    return Graph(next, edges);
}

} // namespace pathgraph
