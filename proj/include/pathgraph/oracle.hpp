#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "pathgraph/attachedness.hpp"
#include "pathgraph/chordal.hpp"
#include "pathgraph/graph.hpp"

namespace pathgraph {

inline constexpr int kTreeOracleGuard = 9;
inline constexpr int kColoringOracleGuard = 8;

// First tree in Prüfer order that is a clique path tree. Requires a chordal,
// connected graph with at most kTreeOracleGuard maximal cliques.
std::optional<CliqueTree> oracle_clique_path_tree(const Graph& g);

// First canonical assignment (colors 1..s) passing is_strong_coloring.
std::optional<std::vector<int>> oracle_strong_coloring(const AttachednessGraph& m);

struct HostRealization {
    int node_count = 0;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<std::vector<int>> paths; // node sequence per vertex
};

// Vertex-intersection graph of the paths.
Graph intersection_graph(const HostRealization& h);

// 64-bit Mersenne Twister; bounded draws use rejection sampling so results
// do not depend on the standard library's distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t bound);
    int uniform(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  private:
    std::mt19937_64 engine_;
};

// Random labeled tree on `nodes` nodes via a random Prüfer sequence.
std::vector<std::pair<int, int>> random_tree(int nodes, Rng& rng);

// Random paths in a random tree; resampled until the graph is connected.
// Throws GenerationError after the retry budget.
std::pair<Graph, HostRealization> gen_path_graph(int tree_nodes, int paths, std::uint64_t seed);

// Connected chordal graph grown by repeatedly adding a vertex whose
// neighborhood is a random clique of the current graph.
Graph gen_chordal(int n, std::uint64_t seed);

// K4 on 1..4 with pendant vertices 0 ~ {1,2}, 5 ~ {1,3}, 6 ~ {1,4}.
Graph k4_hub_graph();
// Labeled a..h as ids 0..7.
Graph lettered_graph();
// Clique 0..q-1 plus one new vertex adjacent to each listed trace.
Graph trace_star_graph(int q, const std::vector<VertexSet>& traces);

} // namespace pathgraph
