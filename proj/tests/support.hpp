#pragma once

// Brute-force reference code shared by the tests. Nothing here calls the
// library's algorithms; only Graph accessors are used.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "pathgraph/graph.hpp"
#include "pathgraph/oracle.hpp"

namespace support {

using pathgraph::Graph;
using pathgraph::Vertex;
using pathgraph::VertexSet;

// Vertex names of lettered_graph().
enum : Vertex { a = 0, b, c, d, e, f, g, h };

inline std::uint32_t adjacency_mask(const Graph& gr, Vertex v) {
    std::uint32_t m = 0;
    for (Vertex w : gr.neighbors(v))
        m |= 1u << w;
    return m;
}

inline VertexSet from_mask(std::uint32_t m) {
    std::vector<Vertex> out;
    for (Vertex v = 0; m; ++v, m >>= 1)
        if (m & 1)
            out.push_back(v);
    return VertexSet(out);
}

inline bool mask_is_clique(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    for (std::uint32_t r = s; r; r &= r - 1) {
        int v = __builtin_ctz(r);
        if ((s & ~(1u << v) & ~adj[static_cast<std::size_t>(v)]) != 0)
            return false;
    }
    return true;
}

// Every subset checked; n <= ~16.
inline std::vector<VertexSet> bf_maximal_cliques(const Graph& gr) {
    const int n = gr.vertex_count();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = adjacency_mask(gr, v);
    std::vector<VertexSet> out;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (!mask_is_clique(adj, s))
            continue;
        bool maximal = true;
        for (Vertex v = 0; v < n && maximal; ++v)
            if (!(s >> v & 1) && (adj[static_cast<std::size_t>(v)] & s) == s)
                maximal = false;
        if (maximal)
            out.push_back(from_mask(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Union-find components of gr minus `removed`, as sorted sets sorted by minimum.
inline std::vector<VertexSet> bf_components(const Graph& gr, const VertexSet& removed = {}) {
    const int n = gr.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (auto [u, v] : gr.edges())
        if (!removed.contains(u) && !removed.contains(v))
            parent[static_cast<std::size_t>(find(u))] = find(v);
    std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        if (!removed.contains(v))
            groups[static_cast<std::size_t>(find(v))].push_back(v);
    std::vector<VertexSet> out;
    for (auto& grp : groups)
        if (!grp.empty())
            out.emplace_back(grp);
    std::sort(out.begin(), out.end(), [](const VertexSet& x, const VertexSet& y) { return x.front() < y.front(); });
    return out;
}

// True iff some vertex subset of size >= 4 induces a cycle.
inline bool bf_has_hole(const std::vector<std::uint32_t>& adj, int n) {
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) < 4)
            continue;
        bool two = true;
        for (std::uint32_t r = s; r && two; r &= r - 1)
            two = __builtin_popcount(adj[static_cast<std::size_t>(__builtin_ctz(r))] & s) == 2;
        if (!two)
            continue;
        // all degrees two: a cycle iff connected
        std::uint32_t seen = s & (~s + 1), frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t r = frontier; r; r &= r - 1)
                next |= adj[static_cast<std::size_t>(__builtin_ctz(r))] & s;
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == s)
            return true;
    }
    return false;
}

inline bool bf_has_hole(const Graph& gr) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(gr.vertex_count()));
    for (Vertex v = 0; v < gr.vertex_count(); ++v)
        adj[static_cast<std::size_t>(v)] = adjacency_mask(gr, v);
    return bf_has_hole(adj, gr.vertex_count());
}

// Maximal cliques whose removal leaves >= 2 components (connected gr).
inline std::vector<VertexSet> bf_separators(const Graph& gr) {
    std::vector<VertexSet> out;
    for (auto& q : bf_maximal_cliques(gr))
        if (bf_components(gr, q).size() >= 2)
            out.push_back(q);
    return out;
}

inline Graph relabel(const Graph& gr, const std::vector<Vertex>& perm) {
    std::vector<pathgraph::Edge> edges;
    for (auto [u, v] : gr.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(gr.vertex_count(), edges);
}

inline std::vector<Vertex> random_permutation(int n, pathgraph::Rng& rng) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[rng.below(static_cast<std::uint64_t>(i + 1))]);
    return p;
}

inline Graph random_graph(int n, pathgraph::Rng& rng, int percent) {
    std::vector<pathgraph::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(100)) < percent)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Clique 0..q-1 with pendants on random nonempty proper subsets.
inline Graph random_trace_star(std::uint64_t seed) {
    pathgraph::Rng rng(seed);
    const int q = rng.uniform(3, 6);
    const int t = rng.uniform(2, 6);
    std::vector<VertexSet> traces;
    for (int i = 0; i < t; ++i) {
        std::vector<Vertex> s;
        for (Vertex v = 0; v < q; ++v)
            if (rng.below(2))
                s.push_back(v);
        if (s.empty() || static_cast<int>(s.size()) == q)
            s = {rng.uniform(0, q - 1)};
        traces.emplace_back(s);
    }
    return pathgraph::trace_star_graph(q, traces);
}

// Seeded chordal corpus used by the property tests.
inline std::vector<Graph> corpus(int count, std::uint64_t first_seed = 0) {
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(i);
        out.push_back(i % 2 == 0 ? pathgraph::gen_chordal(7 + i % 6, seed) : random_trace_star(seed));
    }
    return out;
}

} // namespace support
