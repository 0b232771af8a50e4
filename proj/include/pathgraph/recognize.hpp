#pragma once

#include <optional>
#include <vector>

#include "pathgraph/attachedness.hpp"
#include "pathgraph/decomposition.hpp"
#include "pathgraph/obstructions.hpp"
#include "pathgraph/skeleton.hpp"

namespace pathgraph {

struct SeparatorAnalysis {
    Decomposition decomposition;
    AttachednessGraph attachedness;
    Skeleton skeleton;
    std::optional<WeakColoring> coloring;
    std::optional<Refutation> refutation;
    std::optional<Obstruction> obstruction;         // colored subgraph
    std::optional<Obstruction> induced_obstruction; // member of the full family, induced

    const VertexSet& separator() const { return decomposition.separator; }
};

enum class VerdictKind { NotChordal, Member, NonMember };

struct Verdict {
    VerdictKind kind = VerdictKind::Member;
    std::vector<Vertex> hole;
    std::vector<SeparatorAnalysis> separators;
    int failing = -1; // first failing separator, if any

    bool member() const { return kind == VerdictKind::Member; }
};

SeparatorAnalysis analyze_separator(const Graph& g, const VertexSet& q);

// Every separator is analyzed; a chordal graph is a path graph iff all of them colour.
Verdict recognize_path_graph(const Graph& g);

struct DirectedVerdict {
    VerdictKind kind = VerdictKind::Member;
    std::vector<Vertex> hole;
    std::optional<VertexSet> separator;
    std::vector<int> odd_cycle; // classes of the failing antipodality graph
    bool member() const { return kind == VerdictKind::Member; }
};

// Membership holds iff every separator's antipodality graph is bipartite.
DirectedVerdict recognize_directed_path_graph(const Graph& g);

// Shortest odd cycle in the antipodality graph, if any.
std::optional<std::vector<int>> antipodal_odd_cycle(const AttachednessGraph& m);

} // namespace pathgraph
