#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathgraph/attachedness.hpp"
#include "pathgraph/skeleton.hpp"

namespace pathgraph {

enum class Family { W0, W1, F, FTilde, DF, FullTriangle };

const char* to_string(Family f);
// Accepts w0, w1, f, ftilde, df, full_antipodal_triangle.
std::optional<Family> family_from_string(const std::string& name);

struct ObstructionPattern {
    Family family = Family::W0;
    int order = 0; // k for wheels, n for fans, 0 for the triangle
    EdgeColoredGraph pattern;
};

// Wheels: rim 0..2k, hub 2k+1; W1's antipodal spoke is (0, hub).
// Fans: antipodal cycle 0..2n with the dominance chords at 0 (and at 1 for DF);
// FTilde adds the antipodal chord (1, 2n).
// Throws InputError for k < 1 or n < 2.
ObstructionPattern build_family(Family f, int size);

// Wheels and fans with at most max_vertices vertices, smallest first.
// f0_only keeps W0, W1 and F.
std::vector<ObstructionPattern> family_catalogue(int max_vertices, bool f0_only);

struct Obstruction {
    ObstructionPattern pattern;
    std::vector<int> embedding; // class per pattern vertex
    VertexSet separator;
    std::optional<Vertex> witness; // FullTriangle only
    bool induced = false;
};

enum class MatchMode { Subgraph, Induced };

inline constexpr int kMatcherGuard = 12;

// Lexicographically first color-preserving embedding. Throws GuardRefusal
// when the host has more than kMatcherGuard vertices.
std::optional<std::vector<int>> find_colored_embedding(const EdgeColoredGraph& host, const ObstructionPattern& p,
                                                       MatchMode mode);

bool verify_obstruction(const AttachednessGraph& m, const Obstruction& o);

Obstruction refutation_to_obstruction(const AttachednessGraph& m, const Skeleton& s, const Refutation& r);

// An induced member of the full family inside `within` (classes of m). A full
// triangle whose witness owns a class with the single trace {v} becomes an
// induced W0 with k = 1.
std::optional<Obstruction> induced_obstruction(const AttachednessGraph& m, const Obstruction& subgraph_obstruction);
std::optional<Obstruction> find_family_member(const AttachednessGraph& m, std::span<const int> within, bool f0_only,
                                              MatchMode mode);

} // namespace pathgraph
