#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "pathgraph/graph.hpp"

namespace pathgraph {

/// order[0] is eliminated first; the later neighbors of every vertex form a clique.
struct EliminationOrder {
    std::vector<Vertex> order;
};

/// Chordless cycle of length >= 4, rotated to start at its smallest vertex.
struct HoleCertificate {
    std::vector<Vertex> cycle;
};

using ChordalityResult = std::variant<EliminationOrder, HoleCertificate>;

// Maximum cardinality search (smallest id wins ties) followed by a PEO check.
// Non-chordal graphs yield a shortest hole through the first violating vertex.
ChordalityResult peo_or_hole(const Graph& g);

bool is_chordal(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);
bool is_hole(const Graph& g, std::span<const Vertex> cycle);

// Throws PreconditionError on non-chordal input.
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct CliqueTree {
    std::vector<VertexSet> cliques;
    std::vector<std::pair<int, int>> edges; // (a, b) with a < b, sorted

    std::vector<std::vector<int>> adjacency() const;
};

// Maximum-weight spanning tree over clique intersection sizes (Kruskal,
// ties broken by lexicographic clique-pair order). Requires chordal, connected.
CliqueTree clique_tree(const Graph& g);

// Tree shape plus the subtree property for every vertex.
bool is_clique_tree(const Graph& g, const CliqueTree& t);

// Throws InputError when t's clique list differs from maximal_cliques(g).
bool is_clique_path_tree(const Graph& g, const CliqueTree& t);

// True iff the edge list forms a spanning tree on `nodes` vertices.
bool is_tree(int nodes, std::span<const std::pair<int, int>> edges);

} // namespace pathgraph
