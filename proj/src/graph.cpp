#include "pathgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pathgraph/error.hpp"

namespace pathgraph {

// ---------------- VertexSet ----------------

VertexSet::VertexSet(std::initializer_list<Vertex> items) : VertexSet(std::vector<Vertex>(items)) {}

VertexSet::VertexSet(std::vector<Vertex> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

bool VertexSet::intersects(const VertexSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (*a == *b)
            return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool VertexSet::incomparable_with(const VertexSet& other) const {
    return !is_subset_of(other) && !other.is_subset_of(*this);
}

VertexSet VertexSet::intersection(const VertexSet& other) const {
    VertexSet out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                          std::back_inserter(out.items_));
    return out;
}

VertexSet VertexSet::united(const VertexSet& other) const {
    VertexSet out;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out.items_));
    return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    VertexSet out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out.items_));
    return out;
}

// ---------------- Graph ----------------

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))), labels_(std::move(labels)) {
    if (n < 0)
        throw InputError("negative vertex count");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n))
        throw InputError("label count does not match vertex count");
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        auto& cell = matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
        if (cell)
            continue;
        cell = 1;
        matrix_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] = 1;
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++edge_count_;
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex id " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const {
    if (labels_.empty())
        return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
}

// ---------------- free functions ----------------

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
    for (Vertex v : subset)
        g.check_vertex(v);
    std::vector<int> to_child(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < subset.size(); ++i)
        to_child[static_cast<std::size_t>(subset[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (Vertex u : subset)
        for (Vertex v : g.neighbors(u))
            if (u < v && to_child[static_cast<std::size_t>(v)] >= 0)
                edges.emplace_back(to_child[static_cast<std::size_t>(u)], to_child[static_cast<std::size_t>(v)]);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (Vertex v : subset)
            labels.push_back(g.label(v));
    return {Graph(static_cast<int>(subset.size()), edges, std::move(labels)), subset.items()};
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> seen(n, 0);
    for (Vertex v : removed) {
        g.check_vertex(v);
        seen[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<VertexSet> parts;
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<Vertex> part;
        seen[static_cast<std::size_t>(s)] = 1;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            part.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
        parts.emplace_back(std::move(part));
    }
    return parts;
}

std::vector<VertexSet> connected_components(const Graph& g) { return components_without(g, {}); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_clique(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        g.check_vertex(v);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j]))
                return false;
    return true;
}

Graph graph_plus(const Graph& g) {
    const int n = g.vertex_count();
    auto edges = g.edges();
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, n + v);
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels = g.labels();
        for (Vertex v = 0; v < n; ++v)
            labels.push_back(g.label(v) + "+");
    }
    return Graph(2 * n, edges, std::move(labels));
}

VertexSet all_vertices(const Graph& g) {
    std::vector<Vertex> ids(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        ids[static_cast<std::size_t>(v)] = v;
    return VertexSet(std::move(ids));
}

// ---------------- EdgeColoredGraph ----------------

EdgeColoredGraph::EdgeColoredGraph(int n)
    : n_(n), matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), EdgeColor::None) {}

void EdgeColoredGraph::set_edge(int u, int v, EdgeColor color) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge endpoint out of range");
    if (u == v)
        throw InputError("self-loop in edge-colored graph");
    matrix_[index(u, v)] = color;
    matrix_[index(v, u)] = color;
}

std::vector<ColoredEdge> EdgeColoredGraph::edges() const {
    std::vector<ColoredEdge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (auto c = color(u, v); c != EdgeColor::None)
                out.push_back({u, v, c});
    return out;
}

std::size_t EdgeColoredGraph::edge_count(EdgeColor c) const {
    std::size_t count = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (color(u, v) == c)
                ++count;
    return count;
}

int EdgeColoredGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(u, v))
            ++d;
    return d;
}

int EdgeColoredGraph::degree(int v, EdgeColor c) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && color(u, v) == c)
            ++d;
    return d;
}

const char* to_string(EdgeColor color) {
    switch (color) {
    case EdgeColor::Antipodal:
        return "antipodal";
    case EdgeColor::Dominance:
        return "dominance";
    case EdgeColor::None:
        break;
    }
    return "none";
}

} // namespace pathgraph
