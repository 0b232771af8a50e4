#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pathgraph/decomposition.hpp"
#include "pathgraph/graph.hpp"

namespace pathgraph {

// Trace-level relations. dominates(a, b) reads a <= b.
bool attached(std::span<const VertexSet> a, std::span<const VertexSet> b);
bool antipodal(std::span<const VertexSet> a, std::span<const VertexSet> b);
bool dominates(std::span<const VertexSet> a, std::span<const VertexSet> b);

bool attached(const GammaComponent& a, const GammaComponent& b);
bool antipodal(const GammaComponent& a, const GammaComponent& b);
bool dominates(const GammaComponent& a, const GammaComponent& b);

/// Q-attachedness graph over mutual-dominance classes. Classes are ordered by
/// smallest member; the smallest member represents its class.
struct AttachednessGraph {
    VertexSet separator;
    std::vector<std::vector<int>> class_members;
    std::vector<std::vector<VertexSet>> class_traces;
    EdgeColoredGraph edges;
    std::vector<std::vector<char>> below; // below[a][b]: a < b strictly
    std::map<Vertex, std::vector<int>> neighbor_map; // over classes

    int class_count() const { return edges.vertex_count(); }
    bool is_antipodal(int a, int b) const { return a != b && edges.color(a, b) == EdgeColor::Antipodal; }
    bool is_attached(int a, int b) const { return a == b || edges.has_edge(a, b); }
    bool is_below(int a, int b) const {
        return below[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0;
    }
    // (a, b) pairs with a < b in the dominance order.
    std::vector<std::pair<int, int>> dominance_order() const;

    // Builds a graph straight from relations (no traces). `dominance` holds
    // (a, b) meaning a < b; pairs are closed transitively.
    static AttachednessGraph from_relations(int classes, std::span<const std::pair<int, int>> antipodal_pairs,
                                            std::span<const std::pair<int, int>> dominance,
                                            std::map<Vertex, std::vector<int>> neighbor_map = {});
};

// Antipodality on classes is "attached and <=-incomparable"; see README.
AttachednessGraph quotient(const Decomposition& dec);

// Smallest v with every class of s in N_v.
std::optional<Vertex> is_neighboring_set(const AttachednessGraph& m, std::span<const int> s);

} // namespace pathgraph
