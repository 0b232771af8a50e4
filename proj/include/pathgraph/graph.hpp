#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathgraph {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids. Comparison is lexicographic.
class VertexSet {
  public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> items);
    explicit VertexSet(std::vector<Vertex> items);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    Vertex operator[](std::size_t i) const { return items_[i]; }
    Vertex front() const { return items_.front(); }
    Vertex back() const { return items_.back(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Vertex>& items() const { return items_; }

    bool contains(Vertex v) const;
    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    // Neither set contains the other.
    bool incomparable_with(const VertexSet& other) const;

    VertexSet intersection(const VertexSet& other) const;
    VertexSet united(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

  private:
    std::vector<Vertex> items_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    // Throws InputError on self-loops or out-of-range ids; duplicate edges collapse.
    Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});
    Graph(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    bool adjacent(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    // All edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    // The stored label, or the decimal id when the graph is unlabeled.
    std::string label(Vertex v) const;

    void check_vertex(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

  private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::string> labels_;
};

struct InducedSubgraph {
    Graph graph;
    // to_parent[i] is the parent id of subgraph vertex i (sorted order).
    std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);

// Parts sorted by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
// Components of g - removed, in parent ids.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);
bool is_connected(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);

// G plus a pendant vertex n+i attached to every vertex i.
Graph graph_plus(const Graph& g);

VertexSet all_vertices(const Graph& g);

enum class EdgeColor : std::uint8_t { None = 0, Antipodal = 1, Dominance = 2 };

struct ColoredEdge {
    int u;
    int v;
    EdgeColor color;
    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Graph whose edges carry one of two colors (antipodal or dominance).
class EdgeColoredGraph {
  public:
    EdgeColoredGraph() = default;
    explicit EdgeColoredGraph(int n);

    int vertex_count() const { return n_; }
    void set_edge(int u, int v, EdgeColor color);
    EdgeColor color(int u, int v) const { return matrix_[index(u, v)]; }
    bool has_edge(int u, int v) const { return color(u, v) != EdgeColor::None; }
    // Edges with u < v, sorted.
    std::vector<ColoredEdge> edges() const;
    std::size_t edge_count(EdgeColor color) const;
    int degree(int v) const;
    int degree(int v, EdgeColor color) const;

    friend bool operator==(const EdgeColoredGraph&, const EdgeColoredGraph&) = default;

  private:
    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<EdgeColor> matrix_;
};

const char* to_string(EdgeColor color);

} // namespace pathgraph
