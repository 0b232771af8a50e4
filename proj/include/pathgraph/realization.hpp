#pragma once

#include "pathgraph/chordal.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/oracle.hpp"

namespace pathgraph {

// Validated clique path tree. Glues the trees of the gammas at a separator,
// falls back to the tree oracle when the glue fails validation, and throws
// RealizationError otherwise. Disconnected graphs get their component trees
// linked by arbitrary edges.
CliqueTree realize(const Graph& g);

// Host tree = shape of t; path of v = cliques containing v in path order.
HostRealization clique_path_tree_to_host(const Graph& g, const CliqueTree& t);

} // namespace pathgraph
