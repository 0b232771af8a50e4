#include "pathgraph/obstructions.hpp"

#include <algorithm>

#include "pathgraph/error.hpp"

namespace pathgraph {

namespace {

std::size_t at(int x) { return static_cast<std::size_t>(x); }

constexpr auto A = EdgeColor::Antipodal;
constexpr auto D = EdgeColor::Dominance;

void odd_cycle(EdgeColoredGraph& g, int len) {
    for (int r = 0; r < len; ++r)
        g.set_edge(r, (r + 1) % len, A);
}

bool match(const EdgeColoredGraph& host, const ObstructionPattern& p, MatchMode mode, std::vector<int>& emb,
           std::vector<char>& used) {
    const int depth = static_cast<int>(emb.size());
    if (depth == p.pattern.vertex_count())
        return true;
    for (int h = 0; h < host.vertex_count(); ++h) {
        if (used[at(h)])
            continue;
        bool ok = true;
        for (int q = 0; q < depth && ok; ++q) {
            const EdgeColor want = p.pattern.color(q, depth);
            const EdgeColor got = host.color(emb[at(q)], h);
            ok = want == EdgeColor::None ? (mode == MatchMode::Subgraph || got == EdgeColor::None) : got == want;
        }
        if (!ok)
            continue;
        used[at(h)] = 1;
        emb.push_back(h);
        if (match(host, p, mode, emb, used))
            return true;
        emb.pop_back();
        used[at(h)] = 0;
    }
    return false;
}

Obstruction make(const AttachednessGraph& m, Family f, int size, std::vector<int> embedding) {
    Obstruction o{build_family(f, size), std::move(embedding), m.separator, std::nullopt, false};
    return o;
}

// Smallest class in `pool` antipodal to x, or -1.
int attacker(const AttachednessGraph& m, const std::vector<int>& pool, int x) {
    for (int c : pool)
        if (m.is_antipodal(x, c))
            return c;
    return -1;
}

// Hub, attackers a and b, and the path between them: W1 when a == b, else a fan.
std::optional<Obstruction> fan_or_wheel(const AttachednessGraph& m, int hub, int a, int b, const std::vector<int>& path) {
    if (a < 0 || b < 0)
        return std::nullopt;
    if (a == b) {
        std::vector<int> emb{a};
        emb.insert(emb.end(), path.begin(), path.end());
        emb.push_back(hub);
        return make(m, Family::W1, static_cast<int>(path.size()) / 2, std::move(emb));
    }
    std::vector<int> emb{hub, a};
    emb.insert(emb.end(), path.begin(), path.end());
    emb.push_back(b);
    const int n = static_cast<int>(path.size() + 2) / 2;
    return make(m, m.is_antipodal(a, b) ? Family::FTilde : Family::F, n, std::move(emb));
}

std::optional<Obstruction> direct_obstruction(const AttachednessGraph& m, const Skeleton& s, const Refutation& r) {
    const auto& c = r.classes;
    switch (r.kind) {
    case RefutationKind::FullAntipodalTriple: {
        auto o = make(m, Family::FullTriangle, 0, c);
        o.witness = r.witness;
        return o;
    }
    case RefutationKind::BadTriple: {
        const int ui = s.upper[at(r.member.i)], uj = s.upper[at(r.member.j)];
        if (m.is_antipodal(c[1], c[2]))
            return make(m, Family::W1, 1, {c[2], c[0], c[1], ui});
        return make(m, Family::DF, 2, {ui, uj, c[1], c[0], c[2]});
    }
    case RefutationKind::IntraNot2Colorable:
        break;
    }
    const Member mem = r.member;
    if (r.odd_cycle) {
        std::vector<int> emb = c;
        emb.push_back(s.upper[at(mem.i)]);
        return make(m, Family::W0, static_cast<int>(c.size()) / 2, std::move(emb));
    }
    const int x = c.front(), y = c.back();
    if (!mem.is_pair()) {
        std::vector<int> others;
        for (std::size_t k = 0; k < s.upper.size(); ++k)
            if (static_cast<int>(k) != mem.i)
                others.push_back(s.upper[k]);
        return fan_or_wheel(m, s.upper[at(mem.i)], attacker(m, others, x), attacker(m, others, y), c);
    }
    const auto& di = s.single[at(mem.i)];
    const auto& dj = s.single[at(mem.j)];
    const bool x_hit_i = attacker(m, di, x) >= 0;
    const bool y_hit_i = attacker(m, di, y) >= 0;
    if (x_hit_i == y_hit_i) {
        // Both ends carry the same forced color c; attackers live in the other D.
        const auto& pool = x_hit_i ? di : dj;
        const int hub = s.upper[at(x_hit_i ? mem.j : mem.i)];
        return fan_or_wheel(m, hub, attacker(m, pool, x), attacker(m, pool, y), c);
    }
    std::vector<int> path = c;
    if (!x_hit_i)
        std::reverse(path.begin(), path.end());
    const int a = attacker(m, di, path.front()), b = attacker(m, dj, path.back());
    if (a < 0 || b < 0)
        return std::nullopt;
    std::vector<int> emb{s.upper[at(mem.i)], s.upper[at(mem.j)], a};
    emb.insert(emb.end(), path.begin(), path.end());
    emb.push_back(b);
    const int n = static_cast<int>(emb.size() - 1) / 2;
    return make(m, Family::DF, n, std::move(emb));
}

std::vector<int> all_classes(const AttachednessGraph& m) {
    std::vector<int> out(at(m.class_count()));
    for (int c = 0; c < m.class_count(); ++c)
        out[at(c)] = c;
    return out;
}

} // namespace

const char* to_string(Family f) {
    switch (f) {
    case Family::W0:
        return "w0";
    case Family::W1:
        return "w1";
    case Family::F:
        return "f";
    case Family::FTilde:
        return "ftilde";
    case Family::DF:
        return "df";
    case Family::FullTriangle:
        return "full_antipodal_triangle";
    }
    return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
    for (Family f : {Family::W0, Family::W1, Family::F, Family::FTilde, Family::DF, Family::FullTriangle})
        if (name == to_string(f))
            return f;
    return std::nullopt;
}

ObstructionPattern build_family(Family f, int size) {
    ObstructionPattern p{f, size, {}};
    switch (f) {
    case Family::FullTriangle:
        p.order = 0;
        p.pattern = EdgeColoredGraph(3);
        odd_cycle(p.pattern, 3);
        return p;
    case Family::W0:
    case Family::W1: {
        if (size < 1)
            throw InputError("wheels need k >= 1");
        const int rim = 2 * size + 1;
        p.pattern = EdgeColoredGraph(rim + 1);
        odd_cycle(p.pattern, rim);
        for (int r = 0; r < rim; ++r)
            p.pattern.set_edge(r, rim, D);
        if (f == Family::W1)
            p.pattern.set_edge(0, rim, A);
        return p;
    }
    case Family::F:
    case Family::FTilde:
    case Family::DF: {
        if (size < 2)
            throw InputError("fans need n >= 2");
        const int len = 2 * size + 1;
        p.pattern = EdgeColoredGraph(len);
        odd_cycle(p.pattern, len);
        for (int j = 2; j < len - 1; ++j)
            p.pattern.set_edge(0, j, D);
        if (f == Family::FTilde)
            p.pattern.set_edge(1, len - 1, A);
        if (f == Family::DF)
            for (int j = 3; j < len; ++j)
                p.pattern.set_edge(1, j, D);
        return p;
    }
    }
    throw InputError("unknown family");
}

std::vector<ObstructionPattern> family_catalogue(int max_vertices, bool f0_only) {
    std::vector<ObstructionPattern> out;
    for (int v = 4; v <= max_vertices; ++v) {
        if (v % 2 == 0) {
            out.push_back(build_family(Family::W0, (v - 2) / 2));
            out.push_back(build_family(Family::W1, (v - 2) / 2));
        } else if (v >= 5) {
            out.push_back(build_family(Family::F, (v - 1) / 2));
            if (!f0_only) {
                out.push_back(build_family(Family::FTilde, (v - 1) / 2));
                out.push_back(build_family(Family::DF, (v - 1) / 2));
            }
        }
    }
    return out;
}

std::optional<std::vector<int>> find_colored_embedding(const EdgeColoredGraph& host, const ObstructionPattern& p,
                                                       MatchMode mode) {
    if (host.vertex_count() > kMatcherGuard)
        throw GuardRefusal("colored subgraph search limited to " + std::to_string(kMatcherGuard) + " host vertices");
    if (p.pattern.vertex_count() > host.vertex_count())
        return std::nullopt;
    std::vector<int> emb;
    std::vector<char> used(at(host.vertex_count()), 0);
    if (match(host, p, mode, emb, used))
        return emb;
    return std::nullopt;
}

bool verify_obstruction(const AttachednessGraph& m, const Obstruction& o) {
    const auto& p = o.pattern.pattern;
    const auto& e = o.embedding;
    if (e.size() != at(p.vertex_count()))
        return false;
    for (std::size_t a = 0; a < e.size(); ++a) {
        if (e[a] < 0 || e[a] >= m.class_count())
            return false;
        for (std::size_t b = a + 1; b < e.size(); ++b) {
            if (e[a] == e[b])
                return false;
            const EdgeColor want = p.color(static_cast<int>(a), static_cast<int>(b));
            const EdgeColor got = m.edges.color(e[a], e[b]);
            if (want != EdgeColor::None ? got != want : (o.induced && got != EdgeColor::None))
                return false;
        }
    }
    if (o.pattern.family == Family::FullTriangle) {
        if (!o.witness)
            return false;
        auto it = m.neighbor_map.find(*o.witness);
        if (it == m.neighbor_map.end())
            return false;
        for (int c : e)
            if (!std::binary_search(it->second.begin(), it->second.end(), c))
                return false;
    }
    return true;
}

std::optional<Obstruction> find_family_member(const AttachednessGraph& m, std::span<const int> within, bool f0_only,
                                              MatchMode mode) {
    std::vector<int> pool(within.begin(), within.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const int n = static_cast<int>(pool.size());
    EdgeColoredGraph host(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (auto c = m.edges.color(pool[at(a)], pool[at(b)]); c != EdgeColor::None)
                host.set_edge(a, b, c);
    for (auto& p : family_catalogue(n, f0_only))
        if (auto emb = find_colored_embedding(host, p, mode)) {
            std::vector<int> mapped;
            for (int h : *emb)
                mapped.push_back(pool[at(h)]);
            Obstruction o{std::move(p), std::move(mapped), m.separator, std::nullopt, mode == MatchMode::Induced};
            return o;
        }
    return std::nullopt;
}

Obstruction refutation_to_obstruction(const AttachednessGraph& m, const Skeleton& s, const Refutation& r) {
    if (auto o = direct_obstruction(m, s, r); o && verify_obstruction(m, *o))
        return *o;
    if (m.class_count() <= kMatcherGuard)
        if (auto o = find_family_member(m, all_classes(m), false, MatchMode::Subgraph))
            return *o;
    throw InvariantError("refutation does not yield a verifiable obstruction");
}

std::optional<Obstruction> induced_obstruction(const AttachednessGraph& m, const Obstruction& sub) {
    if (sub.pattern.family == Family::FullTriangle) {
        if (!sub.witness)
            return std::nullopt;
        const std::vector<VertexSet> single{VertexSet{*sub.witness}};
        for (int c = 0; c < m.class_count(); ++c)
            if (m.class_traces[at(c)] == single) {
                std::vector<int> emb = sub.embedding;
                emb.push_back(c);
                Obstruction o{build_family(Family::W0, 1), std::move(emb), m.separator, std::nullopt, true};
                if (verify_obstruction(m, o))
                    return o;
            }
        return std::nullopt;
    }
    return find_family_member(m, sub.embedding, false, MatchMode::Induced);
}

} // namespace pathgraph
