#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pathgraph/chordal.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/obstructions.hpp"
#include "pathgraph/recognize.hpp"

namespace pathgraph {

enum class Format { EdgeList, Graph6 };

std::optional<Format> format_from_string(const std::string& name);

// Edge list: optional "p <n>" header, "u v" lines, '#' comments. Errors carry
// the 1-based line number. graph6 accepts the optional >>graph6<< header.
Graph parse_graph(std::string_view text, Format format);
std::string to_edgelist(const Graph& g);
std::string to_graph6(const Graph& g);

struct VerdictOptions {
    std::string input;        // descriptor echoed into the document
    bool gplus = false;
    bool with_realization = false;
    bool detail = false;       // per-separator skeleton and colours
};

// Canonical JSON (sorted keys, two-space indent).
std::string verdict_json(const Graph& g, const VerdictOptions& options);

std::string dot(const AttachednessGraph& m);
std::string dot(const CliqueTree& t);
std::string dot(const ObstructionPattern& p);

} // namespace pathgraph
