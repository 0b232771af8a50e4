#pragma once

#include <map>
#include <vector>

#include "pathgraph/graph.hpp"

namespace pathgraph {

struct GammaComponent {
    int index = 0;
    VertexSet vertices;  // V_i plus Q
    VertexSet component; // V_i
    std::vector<VertexSet> relevant_cliques;
    std::vector<VertexSet> traces; // K & Q per relevant clique, deduplicated, sorted
};

struct Decomposition {
    VertexSet separator;
    std::vector<GammaComponent> gammas;
    // Every v in Q maps to the gamma indices with v in some trace (possibly none).
    std::map<Vertex, std::vector<int>> neighbor_map;
};

// Maximal cliques whose removal leaves >= 2 components inside the connected
// component that holds them. Requires a chordal graph.
std::vector<VertexSet> clique_separators(const Graph& g);

// Throws PreconditionError when q is not a clique separator of g.
Decomposition gamma_components(const Graph& g, const VertexSet& q);

std::vector<VertexSet> relevant_cliques(const Graph& gamma_graph, const VertexSet& q_image);

} // namespace pathgraph
