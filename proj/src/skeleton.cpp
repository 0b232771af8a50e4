#include "pathgraph/skeleton.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pathgraph/error.hpp"

namespace pathgraph {

namespace {

const std::vector<int> kEmpty;

std::size_t at(int x) { return static_cast<std::size_t>(x); }

struct Bfs {
    std::vector<int> dist;
    std::vector<int> parent;
};

// BFS over the antipodal edges of m restricted to `allowed`.
Bfs bfs(const AttachednessGraph& m, const std::vector<int>& allowed, int source) {
    Bfs out{std::vector<int>(at(m.class_count()), -1), std::vector<int>(at(m.class_count()), -1)};
    std::deque<int> queue{source};
    out.dist[at(source)] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : allowed)
            if (out.dist[at(y)] < 0 && m.is_antipodal(x, y)) {
                out.dist[at(y)] = out.dist[at(x)] + 1;
                out.parent[at(y)] = x;
                queue.push_back(y);
            }
    }
    return out;
}

std::vector<int> walk_to_root(const Bfs& b, int x) {
    std::vector<int> path;
    for (; x >= 0; x = b.parent[at(x)])
        path.push_back(x);
    return path; // x ... source
}

std::optional<std::vector<int>> shortest_odd_cycle(const AttachednessGraph& m, const std::vector<int>& d) {
    std::optional<std::vector<int>> best;
    for (int s : d) {
        auto b = bfs(m, d, s);
        for (int x : d)
            for (int y : d) {
                if (x >= y || !m.is_antipodal(x, y) || b.dist[at(x)] < 0 || b.dist[at(x)] != b.dist[at(y)])
                    continue;
                const std::size_t len = 2 * at(b.dist[at(x)]) + 1;
                if (best && best->size() <= len)
                    continue;
                auto px = walk_to_root(b, x);
                auto py = walk_to_root(b, y);
                std::vector<int> cycle(px.rbegin(), px.rend());
                cycle.insert(cycle.end(), py.begin(), py.end() - 1);
                best = std::move(cycle);
            }
    }
    return best;
}

// Extends `colors` over member d with palette {p, q}. On failure returns the
// odd cycle or the shortest conflicting path between precolored classes.
std::optional<Refutation> two_color_member(const AttachednessGraph& m, Member member, std::vector<int> d, int p,
                                           int q, std::vector<int>& colors) {
    std::sort(d.begin(), d.end());
    if (auto cycle = shortest_odd_cycle(m, d)) {
        Refutation r;
        r.kind = RefutationKind::IntraNot2Colorable;
        r.classes = std::move(*cycle);
        r.member = member;
        r.odd_cycle = true;
        return r;
    }
    std::vector<int> pre;
    for (int x : d)
        if (colors[at(x)] != 0)
            pre.push_back(x);
    std::optional<std::vector<int>> conflict;
    for (int x : pre) {
        auto b = bfs(m, d, x);
        for (int y : pre) {
            if (y <= x || b.dist[at(y)] < 0)
                continue;
            const bool same = colors[at(x)] == colors[at(y)];
            const bool even = b.dist[at(y)] % 2 == 0;
            if (same == even)
                continue;
            if (conflict && conflict->size() <= at(b.dist[at(y)]) + 1)
                continue;
            auto path = walk_to_root(b, y);
            conflict = std::vector<int>(path.rbegin(), path.rend());
        }
    }
    if (conflict) {
        Refutation r;
        r.kind = RefutationKind::IntraNot2Colorable;
        r.classes = std::move(*conflict);
        r.member = member;
        return r;
    }
    // Consistent: propagate from precolored classes, then from the smallest
    // uncolored class with the default color p.
    auto other = [&](int c) { return c == p ? q : p; };
    auto spread = [&](int s) {
        auto b = bfs(m, d, s);
        for (int y : d)
            if (b.dist[at(y)] >= 0 && colors[at(y)] == 0)
                colors[at(y)] = b.dist[at(y)] % 2 == 0 ? colors[at(s)] : other(colors[at(s)]);
    };
    for (int x : pre)
        spread(x);
    for (int x : d)
        if (colors[at(x)] == 0) {
            colors[at(x)] = p;
            spread(x);
        }
    return std::nullopt;
}

} // namespace

std::vector<Member> Skeleton::members() const {
    std::vector<Member> out;
    for (int i = 0; i < upper_count(); ++i)
        out.push_back({i, -1});
    for (const auto& [key, list] : pair)
        out.push_back({key.first, key.second});
    return out;
}

const std::vector<int>& Skeleton::classes_of(Member m) const {
    if (!m.is_pair())
        return single.at(at(m.i));
    auto it = pair.find({m.i, m.j});
    return it == pair.end() ? kEmpty : it->second;
}

std::vector<int> upper_bounds(const AttachednessGraph& m) {
    std::vector<int> out;
    for (int c = 0; c < m.class_count(); ++c) {
        bool dominated = false;
        for (int d = 0; d < m.class_count() && !dominated; ++d)
            dominated = m.is_below(c, d);
        if (!dominated)
            out.push_back(c);
    }
    return out;
}

std::vector<int> upper_bounds_of(const AttachednessGraph& m, std::span<const int> upper, int c) {
    std::vector<int> out;
    for (std::size_t k = 0; k < upper.size(); ++k)
        if (upper[k] == c || m.is_below(c, upper[k]))
            out.push_back(static_cast<int>(k));
    return out;
}

std::optional<FullTriple> full_antipodal_triple(const AttachednessGraph& m, std::span<const int> restrict_to) {
    std::vector<int> pool(restrict_to.begin(), restrict_to.end());
    std::sort(pool.begin(), pool.end());
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            if (!m.is_antipodal(pool[a], pool[b]))
                continue;
            for (std::size_t c = b + 1; c < pool.size(); ++c) {
                if (!m.is_antipodal(pool[a], pool[c]) || !m.is_antipodal(pool[b], pool[c]))
                    continue;
                std::array<int, 3> triple{pool[a], pool[b], pool[c]};
                if (auto v = is_neighboring_set(m, triple))
                    return FullTriple{triple, *v};
            }
        }
    return std::nullopt;
}

std::optional<FullTriple> full_antipodal_triple(const AttachednessGraph& m) {
    std::vector<int> all(at(m.class_count()));
    for (int c = 0; c < m.class_count(); ++c)
        all[at(c)] = c;
    return full_antipodal_triple(m, all);
}

Skeleton skeleton(const AttachednessGraph& m) {
    Skeleton s;
    s.upper = upper_bounds(m);
    s.single.resize(s.upper.size());
    s.member_of.assign(at(m.class_count()), Member{});
    for (int c = 0; c < m.class_count(); ++c) {
        auto ub = upper_bounds_of(m, s.upper, c);
        if (ub.size() == 1) {
            s.single[at(ub[0])].push_back(c);
            s.member_of[at(c)] = {ub[0], -1};
        } else if (ub.size() == 2) {
            s.pair[{ub[0], ub[1]}].push_back(c);
            s.member_of[at(c)] = {ub[0], ub[1]};
        } else {
            s.unassigned.push_back(c);
        }
    }
    return s;
}

CrossIntraSplit cross_intra_split(const AttachednessGraph& m, const Skeleton& s) {
    if (!s.unassigned.empty())
        throw PreconditionError("skeleton is not a partition");
    CrossIntraSplit out;
    std::set<int> cross_vertices;
    for (const auto& e : m.edges.edges()) {
        if (e.color != EdgeColor::Antipodal)
            continue;
        if (s.member_of[at(e.u)] == s.member_of[at(e.v)]) {
            out.intra.emplace_back(e.u, e.v);
        } else {
            out.cross.emplace_back(e.u, e.v);
            cross_vertices.insert(e.u);
            cross_vertices.insert(e.v);
        }
    }
    out.cross_vertices.assign(cross_vertices.begin(), cross_vertices.end());
    return out;
}

PartialColoring base_coloring(const AttachednessGraph& m, const Skeleton& s) {
    auto split = cross_intra_split(m, s);
    PartialColoring h;
    for (int c : split.cross_vertices)
        if (!s.member_of[at(c)].is_pair())
            h[c] = s.member_of[at(c)].i + 1;
    for (auto [u, v] : split.cross) {
        auto a = h.find(u), b = h.find(v);
        if (a != h.end() && b != h.end() && a->second == b->second)
            throw InvariantError("base coloring is not proper on cross edges");
    }
    return h;
}

std::optional<BadTriple> find_bad_triple(const AttachednessGraph& m, const Skeleton& s) {
    for (const auto& [key, list] : s.pair) {
        const auto& left = s.single[at(key.first)];
        const auto& right = s.single[at(key.second)];
        for (int g : list)
            for (int x : left) {
                if (!m.is_antipodal(g, x))
                    continue;
                for (int y : right)
                    if (m.is_antipodal(g, y))
                        return BadTriple{g, x, y, key.first, key.second};
            }
    }
    return std::nullopt;
}

PartialColoring cross_extension(const AttachednessGraph& m, const Skeleton& s, const PartialColoring& h) {
    auto split = cross_intra_split(m, s);
    PartialColoring out = h;
    for (int c : split.cross_vertices) {
        const Member mem = s.member_of[at(c)];
        if (!mem.is_pair())
            continue;
        bool hit_i = false, hit_j = false;
        for (int x : s.single[at(mem.i)])
            hit_i = hit_i || m.is_antipodal(c, x);
        for (int x : s.single[at(mem.j)])
            hit_j = hit_j || m.is_antipodal(c, x);
        if (hit_i && hit_j)
            throw PreconditionError("cross extension called on a bad triple");
        out[c] = hit_i ? mem.j + 1 : mem.i + 1;
    }
    return out;
}

ColoringResult weak_coloring(const AttachednessGraph& m) {
    auto upper = upper_bounds(m);
    if (auto t = full_antipodal_triple(m, upper)) {
        Refutation r;
        r.kind = RefutationKind::FullAntipodalTriple;
        r.classes.assign(t->classes.begin(), t->classes.end());
        r.witness = t->witness;
        return r;
    }
    auto s = skeleton(m);
    if (!s.unassigned.empty())
        throw InvariantError("class with three upper bounds but no full antipodal triple");
    if (auto bad = find_bad_triple(m, s)) {
        Refutation r;
        r.kind = RefutationKind::BadTriple;
        r.classes = {bad->gamma, bad->left, bad->right};
        r.member = {bad->i, bad->j};
        return r;
    }
    auto cross = cross_extension(m, s, base_coloring(m, s));
    const int l = s.upper_count();
    std::vector<int> colors(at(m.class_count()), 0);
    for (auto [c, col] : cross)
        colors[at(c)] = col;
    for (int i = 0; i < l; ++i)
        colors[at(s.upper[at(i)])] = i + 1;
    for (Member mem : s.members()) {
        const int p = mem.i + 1;
        const int q = mem.is_pair() ? mem.j + 1 : l + 1;
        if (auto r = two_color_member(m, mem, s.classes_of(mem), p, q, colors))
            return *r;
    }
    return WeakColoring{l, std::move(colors)};
}

bool is_strong_coloring(const AttachednessGraph& m, std::span<const int> colors) {
    if (colors.size() != at(m.class_count()))
        return false;
    for (const auto& e : m.edges.edges())
        if (e.color == EdgeColor::Antipodal && colors[at(e.u)] == colors[at(e.v)])
            return false;
    for (const auto& [v, list] : m.neighbor_map) {
        std::set<int> used;
        for (int c : list)
            used.insert(colors[at(c)]);
        if (used.size() > 2)
            return false;
    }
    return true;
}

WeakConditionReport check_weak_conditions(const AttachednessGraph& m, const Skeleton& s, const WeakColoring& f) {
    WeakConditionReport rep;
    const int l = s.upper_count();
    const auto& col = f.colors;
    if (col.size() != at(m.class_count()) || f.upper_count != l || !s.unassigned.empty())
        return rep;
    rep.a = rep.b = rep.c = rep.d = rep.e = rep.f = true;
    for (int i = 0; i < l; ++i)
        rep.a = rep.a && col[at(s.upper[at(i)])] == i + 1;
    for (int i = 0; i < l; ++i)
        for (int g : s.single[at(i)]) {
            rep.b = rep.b && (col[at(g)] == i + 1 || col[at(g)] == l + 1);
            bool hits_upper = std::any_of(s.upper.begin(), s.upper.end(), [&](int u) { return m.is_antipodal(g, u); });
            if (hits_upper)
                rep.d = rep.d && col[at(g)] == i + 1;
        }
    for (const auto& [key, list] : s.pair) {
        const int i = key.first + 1, j = key.second + 1;
        for (int g : list) {
            rep.c = rep.c && (col[at(g)] == i || col[at(g)] == j);
            for (int k : {key.first, key.second})
                for (int x : s.single[at(k)])
                    if (m.is_antipodal(g, x))
                        rep.e = rep.e && col[at(g)] == (k + 1 == i ? j : i);
        }
    }
    for (Member mem : s.members()) {
        const auto& d = s.classes_of(mem);
        for (int x : d)
            for (int y : d)
                if (x < y && m.is_antipodal(x, y))
                    rep.f = rep.f && col[at(x)] != col[at(y)];
    }
    return rep;
}

} // namespace pathgraph
