#include "pathgraph/io.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

#include "pathgraph/error.hpp"
#include "pathgraph/realization.hpp"

namespace pathgraph {

namespace {

using nlohmann::json; // std::map-backed, so keys come out sorted

std::size_t at(int x) { return static_cast<std::size_t>(x); }

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto start = line.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos)
            break;
        auto end = line.find_first_of(" \t", start);
        if (end == std::string_view::npos)
            end = line.size();
        out.push_back(line.substr(start, end - start));
        pos = end;
    }
    return out;
}

long long to_int(std::string_view s, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InputError("line " + std::to_string(line) + ": not an integer: '" + std::string(s) + "'");
    return value;
}

Graph parse_edgelist(std::string_view text) {
    std::vector<Edge> edges;
    long long declared = -1;
    long long max_id = -1;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto f = fields(line);
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (f[0] == "p") {
            if (f.size() != 2 || declared >= 0 || !edges.empty())
                throw InputError(where + "malformed header");
            declared = to_int(f[1], line_no);
            if (declared < 0)
                throw InputError(where + "negative vertex count");
            continue;
        }
        if (f.size() != 2)
            throw InputError(where + "expected two vertex ids");
        const long long u = to_int(f[0], line_no), v = to_int(f[1], line_no);
        if (u < 0 || v < 0)
            throw InputError(where + "negative vertex id");
        if (u == v)
            throw InputError(where + "self-loop at vertex " + std::to_string(u));
        if (declared >= 0 && (u >= declared || v >= declared))
            throw InputError(where + "vertex id out of range");
        if (u > 1'000'000 || v > 1'000'000)
            throw InputError(where + "vertex id too large");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (pos > text.size())
            break;
    }
    const long long n = declared >= 0 ? declared : max_id + 1;
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    for (char ch : text)
        if (ch < 63 || ch > 126)
            throw InputError("line 1: invalid graph6 character");
    std::size_t pos = 0;
    auto take = [&]() -> long long {
        if (pos >= text.size())
            throw InputError("line 1: truncated graph6 data");
        return text[pos++] - 63;
    };
    long long n = take();
    if (n == 63) {
        long long width = 3;
        if (pos < text.size() && text[pos] - 63 == 63) {
            ++pos;
            width = 6;
        }
        n = 0;
        for (long long i = 0; i < width; ++i)
            n = (n << 6) | take();
    }
    if (n > 1'000'000)
        throw InputError("line 1: graph too large");
    std::vector<Edge> edges;
    int bit = -1;
    long long current = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            if (bit < 0) {
                current = take();
                bit = 5;
            }
            if ((current >> bit) & 1)
                edges.emplace_back(i, j);
            --bit;
        }
    if (pos != text.size())
        throw InputError("line 1: trailing graph6 data");
    return Graph(static_cast<int>(n), edges);
}

json vertex_set(const VertexSet& s) { return json(s.items()); }

json obstruction_json(const Obstruction& o) {
    json j;
    j["family"] = to_string(o.pattern.family);
    j["order"] = o.pattern.order;
    j["embedding"] = o.embedding;
    j["induced"] = o.induced;
    json edges = json::array();
    for (const auto& e : o.pattern.pattern.edges())
        edges.push_back({{"u", e.u}, {"v", e.v}, {"color", to_string(e.color)}});
    j["pattern_edges"] = edges;
    if (o.witness)
        j["witness"] = *o.witness;
    return j;
}

const char* refutation_name(RefutationKind k) {
    switch (k) {
    case RefutationKind::FullAntipodalTriple:
        return "full_antipodal_triple";
    case RefutationKind::BadTriple:
        return "bad_triple";
    case RefutationKind::IntraNot2Colorable:
        return "intra_not_2_colorable";
    }
    return "unknown";
}

json member_json(Member m) {
    return m.is_pair() ? json::array({m.i + 1, m.j + 1}) : json::array({m.i + 1});
}

json separator_json(const SeparatorAnalysis& a, bool detail) {
    const auto& m = a.attachedness;
    json j;
    j["separator"] = vertex_set(a.separator());
    j["gamma_count"] = a.decomposition.gammas.size();
    j["class_count"] = m.class_count();
    j["classes"] = m.class_members;
    j["upper"] = a.skeleton.upper;
    j["colorable"] = a.coloring.has_value();
    if (detail) {
        json traces = json::array();
        for (const auto& list : m.class_traces) {
            json t = json::array();
            for (const auto& s : list)
                t.push_back(vertex_set(s));
            traces.push_back(t);
        }
        j["class_traces"] = traces;
        json edges = json::array();
        for (const auto& e : m.edges.edges())
            edges.push_back({{"u", e.u}, {"v", e.v}, {"color", to_string(e.color)}});
        j["edges"] = edges;
        j["dominance_order"] = m.dominance_order();
        json members = json::array();
        for (Member mem : a.skeleton.members())
            members.push_back({{"member", member_json(mem)}, {"classes", a.skeleton.classes_of(mem)}});
        j["members"] = members;
    }
    if (a.coloring)
        j["coloring"] = a.coloring->colors;
    if (a.refutation) {
        json r;
        r["kind"] = refutation_name(a.refutation->kind);
        r["classes"] = a.refutation->classes;
        if (a.refutation->witness)
            r["witness"] = *a.refutation->witness;
        if (a.refutation->kind != RefutationKind::FullAntipodalTriple)
            r["member"] = member_json(a.refutation->member);
        if (a.refutation->kind == RefutationKind::IntraNot2Colorable)
            r["odd_cycle"] = a.refutation->odd_cycle;
        j["refutation"] = r;
    }
    if (a.obstruction)
        j["obstruction"] = obstruction_json(*a.obstruction);
    if (a.induced_obstruction)
        j["induced_obstruction"] = obstruction_json(*a.induced_obstruction);
    return j;
}

std::string dot_quoted(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string edge_style(EdgeColor c) { return c == EdgeColor::Dominance ? " [style=dotted]" : ""; }

} // namespace

std::optional<Format> format_from_string(const std::string& name) {
    if (name == "edgelist")
        return Format::EdgeList;
    if (name == "graph6")
        return Format::Graph6;
    return std::nullopt;
}

Graph parse_graph(std::string_view text, Format format) {
    return format == Format::EdgeList ? parse_edgelist(text) : parse_graph6(text);
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;
    if (n < 63) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    int bit = 5, current = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            if (g.adjacent(i, j))
                current |= 1 << bit;
            if (--bit < 0) {
                out += static_cast<char>(current + 63);
                bit = 5;
                current = 0;
            }
        }
    if (bit != 5)
        out += static_cast<char>(current + 63);
    return out;
}

std::string verdict_json(const Graph& input, const VerdictOptions& options) {
    const Graph g = options.gplus ? graph_plus(input) : input;
    json doc;
    doc["input"] = {{"source", options.input},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()},
                    {"gplus", options.gplus}};
    auto verdict = recognize_path_graph(g);
    doc["chordal"] = verdict.kind != VerdictKind::NotChordal;
    doc["path_graph"] = verdict.member();
    doc["directed_path_graph"] = recognize_directed_path_graph(g).member();
    if (verdict.kind == VerdictKind::NotChordal)
        doc["hole"] = verdict.hole;
    json seps = json::array();
    for (const auto& a : verdict.separators)
        seps.push_back(separator_json(a, options.detail));
    doc["separators"] = seps;
    if (verdict.failing >= 0)
        doc["failing_separator"] = verdict.failing;
    if (options.with_realization && verdict.member()) {
        auto t = realize(g);
        json cliques = json::array();
        for (const auto& k : t.cliques)
            cliques.push_back(vertex_set(k));
        doc["realization"] = {{"cliques", cliques}, {"edges", t.edges}, {"valid", is_clique_path_tree(g, t)}};
    }
    return doc.dump(2) + "\n";
}

std::string dot(const AttachednessGraph& m) {
    std::ostringstream out;
    out << "graph attachedness {\n";
    for (int c = 0; c < m.class_count(); ++c) {
        std::string label;
        for (int gi : m.class_members[at(c)])
            label += (label.empty() ? "g" : ",g") + std::to_string(gi + 1);
        out << "  " << c << " [label=" << dot_quoted(label) << "];\n";
    }
    for (const auto& e : m.edges.edges())
        out << "  " << e.u << " -- " << e.v << edge_style(e.color) << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot(const CliqueTree& t) {
    std::ostringstream out;
    out << "graph clique_tree {\n";
    for (std::size_t c = 0; c < t.cliques.size(); ++c) {
        std::string label;
        for (Vertex v : t.cliques[c])
            label += (label.empty() ? "" : " ") + std::to_string(v);
        out << "  " << c << " [label=" << dot_quoted(label) << "];\n";
    }
    for (auto [a, b] : t.edges)
        out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot(const ObstructionPattern& p) {
    std::ostringstream out;
    out << "graph " << to_string(p.family) << " {\n";
    for (int v = 0; v < p.pattern.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (const auto& e : p.pattern.edges())
        out << "  " << e.u << " -- " << e.v << edge_style(e.color) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace pathgraph
