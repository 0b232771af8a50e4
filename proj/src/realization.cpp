#include "pathgraph/realization.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "pathgraph/attachedness.hpp"
#include "pathgraph/decomposition.hpp"
#include "pathgraph/error.hpp"
#include "pathgraph/skeleton.hpp"

namespace pathgraph {

namespace {

std::size_t at(int x) { return static_cast<std::size_t>(x); }

int index_of(const std::vector<VertexSet>& cliques, const VertexSet& k) {
    auto it = std::lower_bound(cliques.begin(), cliques.end(), k);
    if (it == cliques.end() || *it != k)
        throw InvariantError("clique missing from the parent clique list");
    return static_cast<int>(it - cliques.begin());
}

CliqueTree validated_or_oracle(const Graph& g, CliqueTree candidate, const std::string& where) {
    if (is_clique_path_tree(g, candidate))
        return candidate;
    if (static_cast<int>(candidate.cliques.size()) <= kTreeOracleGuard)
        if (auto t = oracle_clique_path_tree(g))
            return *t;
    throw RealizationError("could not realize " + where);
}

CliqueTree realize_connected(const Graph& g);

// Tree of a gamma with its cliques renamed to indices of the parent list.
std::vector<std::pair<int, int>> gamma_tree(const Graph& g, const GammaComponent& gamma,
                                            const std::vector<VertexSet>& cliques) {
    auto sub = induced_subgraph(g, gamma.vertices);
    auto t = realize_connected(sub.graph);
    std::vector<int> rename;
    for (const auto& k : t.cliques) {
        std::vector<Vertex> mapped;
        for (Vertex x : k)
            mapped.push_back(sub.to_parent[at(x)]);
        rename.push_back(index_of(cliques, VertexSet(std::move(mapped))));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : t.edges)
        edges.emplace_back(rename[at(a)], rename[at(b)]);
    return edges;
}

CliqueTree glue(const Graph& g, const VertexSet& q) {
    CliqueTree out{maximal_cliques(g), {}};
    const int root = index_of(out.cliques, q);
    auto dec = gamma_components(g, q);
    auto m = quotient(dec);
    auto result = weak_coloring(m);
    const auto* f = std::get_if<WeakColoring>(&result);
    if (!f)
        throw RealizationError("separator does not colour");

    std::vector<int> class_of(dec.gammas.size());
    for (std::size_t c = 0; c < m.class_members.size(); ++c)
        for (int gi : m.class_members[c])
            class_of[at(gi)] = static_cast<int>(c);

    // Gammas per colour, dominating classes first.
    std::map<int, std::vector<int>> by_color;
    for (std::size_t gi = 0; gi < dec.gammas.size(); ++gi)
        by_color[f->colors[at(class_of[gi])]].push_back(static_cast<int>(gi));
    for (auto& [color, list] : by_color)
        std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
            return m.is_below(class_of[at(b)], class_of[at(a)]);
        });

    for (auto& [color, list] : by_color) {
        std::vector<int> branch{root};
        std::vector<int> depth(out.cliques.size(), -1);
        depth[at(root)] = 0;
        for (int gi : list) {
            auto edges = gamma_tree(g, dec.gammas[at(gi)], out.cliques);
            std::vector<std::vector<int>> adj(out.cliques.size());
            for (auto [a, b] : edges) {
                if (a != root && b != root)
                    out.edges.emplace_back(std::min(a, b), std::max(a, b));
                adj[at(a)].push_back(b);
                adj[at(b)].push_back(a);
            }
            // Each former neighbour of Q hangs at the deepest branch node holding its trace.
            std::vector<std::pair<int, int>> attach;
            for (int nb : adj[at(root)]) {
                const auto trace = out.cliques[at(nb)].intersection(q);
                int best = root;
                for (int x : branch)
                    if (trace.is_subset_of(out.cliques[at(x)]) && depth[at(x)] > depth[at(best)])
                        best = x;
                attach.emplace_back(best, nb);
            }
            for (auto [parent, nb] : attach)
                out.edges.emplace_back(std::min(parent, nb), std::max(parent, nb));
            // Depths for the new nodes, by BFS away from their attachment.
            std::deque<int> queue;
            for (auto [parent, nb] : attach) {
                depth[at(nb)] = depth[at(parent)] + 1;
                queue.push_back(nb);
            }
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                branch.push_back(x);
                for (int y : adj[at(x)])
                    if (y != root && depth[at(y)] < 0) {
                        depth[at(y)] = depth[at(x)] + 1;
                        queue.push_back(y);
                    }
            }
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

CliqueTree realize_connected(const Graph& g) {
    auto separators = clique_separators(g);
    if (separators.empty())
        return validated_or_oracle(g, clique_tree(g), "atom");
    return validated_or_oracle(g, glue(g, separators.front()), "separator " + std::to_string(0));
}

} // namespace

CliqueTree realize(const Graph& g) {
    if (g.vertex_count() == 0)
        return {};
    auto parts = connected_components(g);
    if (parts.size() == 1)
        return realize_connected(g);
    CliqueTree out{maximal_cliques(g), {}};
    int previous = -1;
    for (const auto& part : parts) {
        auto sub = induced_subgraph(g, part);
        auto t = realize_connected(sub.graph);
        std::vector<int> rename;
        for (const auto& k : t.cliques) {
            std::vector<Vertex> mapped;
            for (Vertex x : k)
                mapped.push_back(sub.to_parent[at(x)]);
            rename.push_back(index_of(out.cliques, VertexSet(std::move(mapped))));
        }
        for (auto [a, b] : t.edges)
            out.edges.emplace_back(std::min(rename[at(a)], rename[at(b)]), std::max(rename[at(a)], rename[at(b)]));
        if (previous >= 0)
            out.edges.emplace_back(std::min(previous, rename[0]), std::max(previous, rename[0]));
        previous = rename[0];
    }
    std::sort(out.edges.begin(), out.edges.end());
    if (!is_clique_path_tree(g, out))
        throw RealizationError("component trees do not combine");
    return out;
}

HostRealization clique_path_tree_to_host(const Graph& g, const CliqueTree& t) {
    if (!is_clique_path_tree(g, t))
        throw PreconditionError("not a clique path tree");
    HostRealization h;
    h.node_count = static_cast<int>(t.cliques.size());
    h.tree_edges = t.edges;
    auto adj = t.adjacency();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> nodes;
        for (int c = 0; c < h.node_count; ++c)
            if (t.cliques[at(c)].contains(v))
                nodes.push_back(c);
        // Walk from an end of the induced path.
        auto inside = [&](int c) { return std::binary_search(nodes.begin(), nodes.end(), c); };
        int start = nodes.front();
        for (int c : nodes)
            if (std::count_if(adj[at(c)].begin(), adj[at(c)].end(), inside) <= 1) {
                start = c;
                break;
            }
        std::vector<int> path{start};
        int prev = -1, cur = start;
        while (path.size() < nodes.size()) {
            for (int y : adj[at(cur)])
                if (y != prev && inside(y)) {
                    prev = cur;
                    cur = y;
                    break;
                }
            path.push_back(cur);
        }
        h.paths.push_back(std::move(path));
    }
    if (!(intersection_graph(h) == g))
        throw InvariantError("host realization does not reproduce the graph");
    return h;
}

} // namespace pathgraph
