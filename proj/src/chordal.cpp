#include "pathgraph/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

#include "pathgraph/error.hpp"

namespace pathgraph {

namespace {

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> visit_order;
    visit_order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!visited[static_cast<std::size_t>(v)] &&
                (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        visited[static_cast<std::size_t>(best)] = 1;
        visit_order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!visited[static_cast<std::size_t>(w)])
                ++weight[static_cast<std::size_t>(w)];
    }
    return visit_order;
}

std::vector<int> positions(int n, std::span<const Vertex> order) {
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return pos;
}

// Shortest u-w path whose inner vertices avoid `blocked`.
std::optional<std::vector<Vertex>> shortest_path_avoiding(const Graph& g, Vertex u, Vertex w,
                                                          const std::vector<char>& blocked) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -2);
    std::deque<Vertex> queue{u};
    parent[static_cast<std::size_t>(u)] = -1;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        if (x == w)
            break;
        for (Vertex y : g.neighbors(x)) {
            if (parent[static_cast<std::size_t>(y)] != -2)
                continue;
            if (y != w && blocked[static_cast<std::size_t>(y)])
                continue;
            parent[static_cast<std::size_t>(y)] = x;
            queue.push_back(y);
        }
    }
    if (parent[static_cast<std::size_t>(w)] == -2)
        return std::nullopt;
    std::vector<Vertex> path;
    for (Vertex x = w; x != -1; x = parent[static_cast<std::size_t>(x)])
        path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Hole through v using its non-adjacent neighbors u and w, if one exists.
std::optional<std::vector<Vertex>> hole_through(const Graph& g, Vertex v, Vertex u, Vertex w) {
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    blocked[static_cast<std::size_t>(v)] = 1;
    for (Vertex x : g.neighbors(v))
        if (x != u && x != w)
            blocked[static_cast<std::size_t>(x)] = 1;
    auto path = shortest_path_avoiding(g, u, w, blocked);
    if (!path)
        return std::nullopt;
    std::vector<Vertex> cycle{v};
    cycle.insert(cycle.end(), path->begin(), path->end());
    return cycle;
}

std::vector<Vertex> normalize_cycle(std::vector<Vertex> cycle) {
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

std::vector<Vertex> any_hole(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j]))
                    if (auto cycle = hole_through(g, v, nb[i], nb[j]))
                        return *cycle;
    }
    throw InvariantError("graph failed the elimination check but has no hole");
}

std::vector<Vertex> later_neighbors(const Graph& g, Vertex v, const std::vector<int>& pos) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
        if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)])
            out.push_back(w);
    return out;
}

void require_same_cliques(const Graph& g, const CliqueTree& t) {
    if (t.cliques != maximal_cliques(g))
        throw InputError("clique list does not match the maximal cliques of the graph");
}

// For every vertex: (edges inside its clique set, max induced degree, set size).
template <class Check>
bool every_vertex_clique_set(const Graph& g, const CliqueTree& t, Check check) {
    const auto k = t.cliques.size();
    std::vector<char> member(k, 0);
    std::vector<int> deg(k, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::size_t size = 0;
        for (std::size_t c = 0; c < k; ++c) {
            member[c] = t.cliques[c].contains(v) ? 1 : 0;
            deg[c] = 0;
            size += static_cast<std::size_t>(member[c]);
        }
        std::size_t inner = 0;
        for (auto [a, b] : t.edges)
            if (member[static_cast<std::size_t>(a)] && member[static_cast<std::size_t>(b)]) {
                ++inner;
                ++deg[static_cast<std::size_t>(a)];
                ++deg[static_cast<std::size_t>(b)];
            }
        const int max_deg = k == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
        if (!check(size, inner, max_deg))
            return false;
    }
    return true;
}

} // namespace

ChordalityResult peo_or_hole(const Graph& g) {
    auto order = maximum_cardinality_search(g);
    std::reverse(order.begin(), order.end());
    const auto pos = positions(g.vertex_count(), order);
    for (Vertex v : order) {
        auto later = later_neighbors(g, v, pos);
        if (later.size() < 2)
            continue;
        Vertex parent = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) {
            return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
        });
        for (Vertex w : later) {
            if (w == parent || g.adjacent(parent, w))
                continue;
            auto cycle = hole_through(g, v, parent, w);
            return HoleCertificate{normalize_cycle(cycle ? *cycle : any_hole(g))};
        }
    }
    return EliminationOrder{std::move(order)};
}

bool is_chordal(const Graph& g) { return std::holds_alternative<EliminationOrder>(peo_or_hole(g)); }

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
    if (order.size() != static_cast<std::size_t>(g.vertex_count()))
        return false;
    auto pos = positions(g.vertex_count(), order);
    if (std::find(pos.begin(), pos.end(), -1) != pos.end())
        return false;
    for (Vertex v : order) {
        auto later = later_neighbors(g, v, pos);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.adjacent(later[i], later[j]))
                    return false;
    }
    return true;
}

bool is_hole(const Graph& g, std::span<const Vertex> cycle) {
    const auto len = cycle.size();
    if (len < 4)
        return false;
    for (std::size_t i = 0; i < len; ++i) {
        if (cycle[i] < 0 || cycle[i] >= g.vertex_count())
            return false;
        for (std::size_t j = i + 1; j < len; ++j) {
            if (cycle[i] == cycle[j])
                return false;
            const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive)
                return false;
        }
    }
    return true;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    auto result = peo_or_hole(g);
    const auto* peo = std::get_if<EliminationOrder>(&result);
    if (!peo)
        throw PreconditionError("maximal_cliques requires a chordal graph");
    const auto pos = positions(g.vertex_count(), peo->order);
    std::vector<VertexSet> candidates;
    for (Vertex v : peo->order) {
        auto later = later_neighbors(g, v, pos);
        later.push_back(v);
        candidates.emplace_back(std::move(later));
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<VertexSet> kept;
    for (auto& c : candidates) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return c.is_subset_of(k); });
        if (!dominated)
            kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<std::vector<int>> CliqueTree::adjacency() const {
    std::vector<std::vector<int>> adj(cliques.size());
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());
    return adj;
}

CliqueTree clique_tree(const Graph& g) {
    if (!is_connected(g))
        throw PreconditionError("clique_tree requires a connected graph");
    CliqueTree tree{maximal_cliques(g), {}};
    const int k = static_cast<int>(tree.cliques.size());
    struct Candidate {
        std::size_t weight;
        int a;
        int b;
    };
    std::vector<Candidate> candidates;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            auto w = tree.cliques[static_cast<std::size_t>(a)].intersection(tree.cliques[static_cast<std::size_t>(b)]).size();
            if (w > 0)
                candidates.push_back({w, a, b});
        }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.weight > y.weight; });
    std::vector<int> root(static_cast<std::size_t>(k));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<std::size_t>(x)] != x)
            x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& c : candidates) {
        int ra = find(c.a), rb = find(c.b);
        if (ra == rb)
            continue;
        root[static_cast<std::size_t>(ra)] = rb;
        tree.edges.emplace_back(c.a, c.b);
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    return tree;
}

bool is_tree(int nodes, std::span<const std::pair<int, int>> edges) {
    if (nodes == 0)
        return edges.empty();
    if (edges.size() != static_cast<std::size_t>(nodes - 1))
        return false;
    std::vector<int> root(static_cast<std::size_t>(nodes));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<std::size_t>(x)] != x)
            x = root[static_cast<std::size_t>(x)];
        return x;
    };
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
            return false;
        int ra = find(a), rb = find(b);
        if (ra == rb)
            return false;
        root[static_cast<std::size_t>(ra)] = rb;
    }
    return true;
}

bool is_clique_tree(const Graph& g, const CliqueTree& t) {
    require_same_cliques(g, t);
    if (!is_tree(static_cast<int>(t.cliques.size()), t.edges))
        return false;
    return every_vertex_clique_set(g, t, [](std::size_t size, std::size_t inner, int) { return inner + 1 == size; });
}

bool is_clique_path_tree(const Graph& g, const CliqueTree& t) {
    require_same_cliques(g, t);
    if (!is_tree(static_cast<int>(t.cliques.size()), t.edges))
        return false;
    return every_vertex_clique_set(
        g, t, [](std::size_t size, std::size_t inner, int max_deg) { return inner + 1 == size && max_deg <= 2; });
}

} // namespace pathgraph
