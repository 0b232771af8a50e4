#include "pathgraph/recognize.hpp"

#include <deque>

#include "pathgraph/chordal.hpp"
#include "pathgraph/error.hpp"

namespace pathgraph {

namespace {

std::size_t at(int x) { return static_cast<std::size_t>(x); }

} // namespace

SeparatorAnalysis analyze_separator(const Graph& g, const VertexSet& q) {
    SeparatorAnalysis a;
    a.decomposition = gamma_components(g, q);
    a.attachedness = quotient(a.decomposition);
    a.skeleton = skeleton(a.attachedness);
    auto result = weak_coloring(a.attachedness);
    if (auto* f = std::get_if<WeakColoring>(&result)) {
        a.coloring = std::move(*f);
        return a;
    }
    a.refutation = std::get<Refutation>(result);
    a.obstruction = refutation_to_obstruction(a.attachedness, a.skeleton, *a.refutation);
    a.induced_obstruction = induced_obstruction(a.attachedness, *a.obstruction);
    return a;
}

Verdict recognize_path_graph(const Graph& g) {
    Verdict v;
    auto chordality = peo_or_hole(g);
    if (auto* hole = std::get_if<HoleCertificate>(&chordality)) {
        v.kind = VerdictKind::NotChordal;
        v.hole = hole->cycle;
        return v;
    }
    for (const auto& q : clique_separators(g)) {
        v.separators.push_back(analyze_separator(g, q));
        if (!v.separators.back().coloring && v.failing < 0)
            v.failing = static_cast<int>(v.separators.size()) - 1;
    }
    v.kind = v.failing < 0 ? VerdictKind::Member : VerdictKind::NonMember;
    return v;
}

std::optional<std::vector<int>> antipodal_odd_cycle(const AttachednessGraph& m) {
    const int n = m.class_count();
    std::optional<std::vector<int>> best;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(at(n), -1), parent(at(n), -1);
        std::deque<int> queue{s};
        dist[at(s)] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y = 0; y < n; ++y)
                if (dist[at(y)] < 0 && m.is_antipodal(x, y)) {
                    dist[at(y)] = dist[at(x)] + 1;
                    parent[at(y)] = x;
                    queue.push_back(y);
                }
        }
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (!m.is_antipodal(x, y) || dist[at(x)] < 0 || dist[at(x)] != dist[at(y)])
                    continue;
                const std::size_t len = 2 * at(dist[at(x)]) + 1;
                if (best && best->size() <= len)
                    continue;
                std::vector<int> left, right;
                for (int z = x; z >= 0; z = parent[at(z)])
                    left.push_back(z);
                for (int z = y; z >= 0; z = parent[at(z)])
                    right.push_back(z);
                std::vector<int> cycle(left.rbegin(), left.rend());
                cycle.insert(cycle.end(), right.begin(), right.end() - 1);
                best = std::move(cycle);
            }
    }
    return best;
}

DirectedVerdict recognize_directed_path_graph(const Graph& g) {
    DirectedVerdict v;
    auto chordality = peo_or_hole(g);
    if (auto* hole = std::get_if<HoleCertificate>(&chordality)) {
        v.kind = VerdictKind::NotChordal;
        v.hole = hole->cycle;
        return v;
    }
    for (const auto& q : clique_separators(g)) {
        auto m = quotient(gamma_components(g, q));
        if (auto cycle = antipodal_odd_cycle(m)) {
            v.kind = VerdictKind::NonMember;
            v.separator = q;
            v.odd_cycle = std::move(*cycle);
            return v;
        }
    }
    return v;
}

} // namespace pathgraph
