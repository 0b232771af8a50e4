#include "pathgraph/attachedness.hpp"

#include <algorithm>

#include "pathgraph/error.hpp"

namespace pathgraph {

bool attached(std::span<const VertexSet> a, std::span<const VertexSet> b) {
    for (const auto& t : a)
        for (const auto& u : b)
            if (t.intersects(u))
                return true;
    return false;
}

bool antipodal(std::span<const VertexSet> a, std::span<const VertexSet> b) {
    for (const auto& t : a)
        for (const auto& u : b)
            if (t.intersects(u) && t.incomparable_with(u))
                return true;
    return false;
}

bool dominates(std::span<const VertexSet> a, std::span<const VertexSet> b) {
    if (!attached(a, b))
        return false;
    for (const auto& u : b) {
        bool all_inside = std::all_of(a.begin(), a.end(), [&](const VertexSet& t) { return t.is_subset_of(u); });
        bool all_apart = std::none_of(a.begin(), a.end(), [&](const VertexSet& t) { return t.intersects(u); });
        if (!all_inside && !all_apart)
            return false;
    }
    return true;
}

bool attached(const GammaComponent& a, const GammaComponent& b) { return attached(a.traces, b.traces); }
bool antipodal(const GammaComponent& a, const GammaComponent& b) { return antipodal(a.traces, b.traces); }
bool dominates(const GammaComponent& a, const GammaComponent& b) { return dominates(a.traces, b.traces); }

std::vector<std::pair<int, int>> AttachednessGraph::dominance_order() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < class_count(); ++a)
        for (int b = 0; b < class_count(); ++b)
            if (is_below(a, b))
                out.emplace_back(a, b);
    return out;
}

namespace {

void check_strict_order(const AttachednessGraph& m) {
    const int n = m.class_count();
    for (int a = 0; a < n; ++a) {
        if (m.is_below(a, a))
            throw InvariantError("dominance order is reflexive");
        for (int b = 0; b < n; ++b) {
            if (!m.is_below(a, b))
                continue;
            if (m.is_below(b, a))
                throw InvariantError("dominance order is not antisymmetric");
            for (int c = 0; c < n; ++c)
                if (m.is_below(b, c) && !m.is_below(a, c))
                    throw InvariantError("dominance order is not transitive");
        }
    }
}

} // namespace

AttachednessGraph AttachednessGraph::from_relations(int classes, std::span<const std::pair<int, int>> antipodal_pairs,
                                                    std::span<const std::pair<int, int>> dominance,
                                                    std::map<Vertex, std::vector<int>> neighbor_map) {
    AttachednessGraph m;
    m.edges = EdgeColoredGraph(classes);
    m.below.assign(static_cast<std::size_t>(classes), std::vector<char>(static_cast<std::size_t>(classes), 0));
    m.class_members.resize(static_cast<std::size_t>(classes));
    m.class_traces.resize(static_cast<std::size_t>(classes));
    for (int c = 0; c < classes; ++c)
        m.class_members[static_cast<std::size_t>(c)] = {c};
    for (auto [a, b] : dominance) {
        m.edges.set_edge(a, b, EdgeColor::Dominance);
        m.below[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    }
    for (int k = 0; k < classes; ++k)
        for (int a = 0; a < classes; ++a)
            for (int b = 0; b < classes; ++b)
                if (m.is_below(a, k) && m.is_below(k, b) && !m.is_below(a, b)) {
                    m.below[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
                    if (a != b)
                        m.edges.set_edge(a, b, EdgeColor::Dominance);
                }
    for (auto [a, b] : antipodal_pairs) {
        if (m.is_below(a, b) || m.is_below(b, a))
            throw InputError("pair is both antipodal and comparable");
        m.edges.set_edge(a, b, EdgeColor::Antipodal);
    }
    m.neighbor_map = std::move(neighbor_map);
    check_strict_order(m);
    return m;
}

AttachednessGraph quotient(const Decomposition& dec) {
    const auto& gammas = dec.gammas;
    const std::size_t g = gammas.size();
    std::vector<std::vector<char>> leq(g, std::vector<char>(g, 0));
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
            leq[a][b] = a == b || dominates(gammas[a], gammas[b]);

    AttachednessGraph m;
    m.separator = dec.separator;
    std::vector<int> class_of(g, -1);
    for (std::size_t a = 0; a < g; ++a) {
        if (class_of[a] >= 0)
            continue;
        const int c = static_cast<int>(m.class_members.size());
        m.class_members.emplace_back();
        for (std::size_t b = a; b < g; ++b)
            if (class_of[b] < 0 && leq[a][b] && leq[b][a]) {
                class_of[b] = c;
                m.class_members.back().push_back(gammas[b].index);
            }
        m.class_traces.push_back(gammas[a].traces);
    }

    const int n = static_cast<int>(m.class_members.size());
    m.edges = EdgeColoredGraph(n);
    m.below.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    auto rep = [&](int c) -> const GammaComponent& {
        return gammas[static_cast<std::size_t>(m.class_members[static_cast<std::size_t>(c)].front())];
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && dominates(rep(a), rep(b)))
                m.below[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    check_strict_order(m);

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!attached(rep(a), rep(b)))
                continue;
            const bool comparable = m.is_below(a, b) || m.is_below(b, a);
            if (comparable && antipodal(rep(a), rep(b)))
                throw InvariantError("pair is both antipodal and comparable");
            m.edges.set_edge(a, b, comparable ? EdgeColor::Dominance : EdgeColor::Antipodal);
        }

    for (const auto& [v, list] : dec.neighbor_map) {
        auto& out = m.neighbor_map[v];
        for (int gi : list)
            out.push_back(class_of[static_cast<std::size_t>(gi)]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return m;
}

std::optional<Vertex> is_neighboring_set(const AttachednessGraph& m, std::span<const int> s) {
    for (const auto& [v, list] : m.neighbor_map) {
        bool all = std::all_of(s.begin(), s.end(),
                               [&](int c) { return std::binary_search(list.begin(), list.end(), c); });
        if (all && !s.empty())
            return v;
    }
    return std::nullopt;
}

} // namespace pathgraph
