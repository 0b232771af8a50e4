#include "pathgraph/decomposition.hpp"

#include <algorithm>

#include "pathgraph/chordal.hpp"
#include "pathgraph/error.hpp"

namespace pathgraph {

namespace {

// Components of G - q that touch q, i.e. the ones inside q's own component.
std::vector<VertexSet> components_at(const Graph& g, const VertexSet& q) {
    std::vector<VertexSet> parts;
    for (auto& part : components_without(g, q)) {
        bool touches = std::any_of(part.begin(), part.end(), [&](Vertex v) {
            return std::any_of(q.begin(), q.end(), [&](Vertex x) { return g.adjacent(v, x); });
        });
        if (touches)
            parts.push_back(std::move(part));
    }
    return parts;
}

} // namespace

std::vector<VertexSet> clique_separators(const Graph& g) {
    std::vector<VertexSet> out;
    for (auto& q : maximal_cliques(g))
        if (components_at(g, q).size() >= 2)
            out.push_back(q);
    return out;
}

std::vector<VertexSet> relevant_cliques(const Graph& gamma_graph, const VertexSet& q_image) {
    std::vector<VertexSet> out;
    for (auto& k : maximal_cliques(gamma_graph))
        if (k != q_image && k.intersects(q_image))
            out.push_back(k);
    return out;
}

Decomposition gamma_components(const Graph& g, const VertexSet& q) {
    for (Vertex v : q)
        g.check_vertex(v);
    if (q.empty() || !is_clique(g, q))
        throw PreconditionError("separator is not a clique");
    auto parts = components_at(g, q);
    if (parts.size() < 2)
        throw PreconditionError("clique does not separate the graph");
    for (auto& part : parts)
        for (Vertex v : part)
            if (std::all_of(q.begin(), q.end(), [&](Vertex x) { return g.adjacent(v, x); }))
                throw PreconditionError("separator is not a maximal clique");

    Decomposition dec;
    dec.separator = q;
    for (Vertex v : q)
        dec.neighbor_map[v];
    for (std::size_t i = 0; i < parts.size(); ++i) {
        GammaComponent gamma;
        gamma.index = static_cast<int>(i);
        gamma.component = parts[i];
        gamma.vertices = parts[i].united(q);
        auto sub = induced_subgraph(g, gamma.vertices);
        std::vector<Vertex> q_local;
        for (std::size_t x = 0; x < sub.to_parent.size(); ++x)
            if (q.contains(sub.to_parent[x]))
                q_local.push_back(static_cast<Vertex>(x));
        for (auto& k : relevant_cliques(sub.graph, VertexSet(q_local))) {
            std::vector<Vertex> mapped;
            for (Vertex x : k)
                mapped.push_back(sub.to_parent[static_cast<std::size_t>(x)]);
            VertexSet clique(std::move(mapped));
            gamma.traces.push_back(clique.intersection(q));
            gamma.relevant_cliques.push_back(std::move(clique));
        }
        std::sort(gamma.relevant_cliques.begin(), gamma.relevant_cliques.end());
        std::sort(gamma.traces.begin(), gamma.traces.end());
        gamma.traces.erase(std::unique(gamma.traces.begin(), gamma.traces.end()), gamma.traces.end());
        for (Vertex v : q)
            if (std::any_of(gamma.traces.begin(), gamma.traces.end(), [&](const VertexSet& t) { return t.contains(v); }))
                dec.neighbor_map[v].push_back(gamma.index);
        dec.gammas.push_back(std::move(gamma));
    }
    return dec;
}

} // namespace pathgraph
