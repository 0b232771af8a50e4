#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "pathgraph/attachedness.hpp"

namespace pathgraph {

// A member of the skeleton: D_i when j < 0, else D_ij (i < j). Indices are
// 0-based positions in the upper list; colors elsewhere are 1-based.
struct Member {
    int i = -1;
    int j = -1;

    bool is_pair() const { return j >= 0; }
    friend auto operator<=>(const Member&, const Member&) = default;
};

struct Skeleton {
    std::vector<int> upper;
    std::vector<std::vector<int>> single;                  // D_i per upper index
    std::map<std::pair<int, int>, std::vector<int>> pair;  // nonempty D_ij only
    std::vector<int> unassigned;                           // classes with >= 3 upper bounds
    std::vector<Member> member_of;                         // {-1,-1} when unassigned

    int upper_count() const { return static_cast<int>(upper.size()); }
    // D_1..D_l, then the nonempty D_ij in lexicographic (i, j) order.
    std::vector<Member> members() const;
    const std::vector<int>& classes_of(Member m) const;
};

struct FullTriple {
    std::array<int, 3> classes{};
    Vertex witness = -1;
};

struct CrossIntraSplit {
    std::vector<std::pair<int, int>> cross;
    std::vector<std::pair<int, int>> intra;
    std::vector<int> cross_vertices;
};

// gamma in D_ij antipodal to left in D_i and to right in D_j.
struct BadTriple {
    int gamma = -1;
    int left = -1;
    int right = -1;
    int i = -1;
    int j = -1;
};

using PartialColoring = std::map<int, int>;

struct WeakColoring {
    int upper_count = 0;
    std::vector<int> colors; // per class, in 1..upper_count+1
};

enum class RefutationKind { FullAntipodalTriple, BadTriple, IntraNot2Colorable };

struct Refutation {
    RefutationKind kind = RefutationKind::FullAntipodalTriple;
    // Full triple: the three classes. Bad triple: (gamma, left, right).
    // Intra: the odd cycle, or the conflict path between two precolored ends.
    std::vector<int> classes;
    std::optional<Vertex> witness;
    Member member;
    bool odd_cycle = false;
};

using ColoringResult = std::variant<WeakColoring, Refutation>;

std::vector<int> upper_bounds(const AttachednessGraph& m);
// Indices (into the upper list) of the upper bounds of class c.
std::vector<int> upper_bounds_of(const AttachednessGraph& m, std::span<const int> upper, int c);

// Lexicographically first pairwise-antipodal triple with a common witness.
std::optional<FullTriple> full_antipodal_triple(const AttachednessGraph& m, std::span<const int> restrict_to);
std::optional<FullTriple> full_antipodal_triple(const AttachednessGraph& m);

Skeleton skeleton(const AttachednessGraph& m);
CrossIntraSplit cross_intra_split(const AttachednessGraph& m, const Skeleton& s);
// h_Q: color i+1 on the cross vertices of D_i.
PartialColoring base_coloring(const AttachednessGraph& m, const Skeleton& s);
std::optional<BadTriple> find_bad_triple(const AttachednessGraph& m, const Skeleton& s);
PartialColoring cross_extension(const AttachednessGraph& m, const Skeleton& s, const PartialColoring& h);

ColoringResult weak_coloring(const AttachednessGraph& m);

// Proper on antipodal edges and at most two colors on every N_v.
bool is_strong_coloring(const AttachednessGraph& m, std::span<const int> colors);

struct WeakConditionReport {
    bool a = false, b = false, c = false, d = false, e = false, f = false;
    bool all() const { return a && b && c && d && e && f; }
};

WeakConditionReport check_weak_conditions(const AttachednessGraph& m, const Skeleton& s, const WeakColoring& f);

} // namespace pathgraph
