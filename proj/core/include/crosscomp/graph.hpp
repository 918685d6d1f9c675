#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crosscomp {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Ordered collection of distinct vertex ids. Order is significant: it carries
/// the 1..r numbering used when sets are identified or triangle-grouped.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    const std::vector<Vertex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;
    Vertex operator[](std::size_t i) const { return members_[i]; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    /// Same members, ascending.
    VertexSet sorted() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Finite simple undirected graph on vertices 0..vertex_count-1.
///
/// Labels are debugging metadata only; equality ignores them.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Adds {u, v}; a no-op if already present. Throws PreconditionError on
    /// self-loops or out-of-range endpoints.
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    /// Appends a fresh isolated vertex and returns its id.
    Vertex add_vertex(std::string label = {});

    /// Sorted ascending.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

    /// All edges as (min, max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    void set_label(Vertex v, std::string label);
    std::optional<std::string> label(Vertex v) const;
    const std::map<Vertex, std::string>& labels() const noexcept { return labels_; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    std::map<Vertex, std::string> labels_;
};

/// Shortest-cycle length; nullopt means the graph is a forest.
using Girth = std::optional<int>;

struct GraphClassification {
    bool is_bipartite = true;
    std::optional<std::pair<VertexSet, VertexSet>> bipartition;
    bool is_cluster = true;
    bool is_cocluster = true;
    Girth girth;
};

enum class GraphClass { Edgeless, Cluster, Cocluster };

Graph complement(const Graph& g);

/// Replaces every edge {u,v} by a path through `inner` fresh vertices. Original
/// ids are kept; the fresh vertices follow in edge order.
Graph subdivide_every_edge(const Graph& g, int inner);

struct Identification {
    Graph graph;
    VertexSet merged;  ///< y_1..y_r
};

/// Disjoint union of `graphs` in which the j-th member of every set is merged
/// into a single vertex y_j. Layout: for each input in order, its vertices
/// outside its set in ascending id order; then y_1..y_r.
Identification identify_vertex_sets(std::span<const Graph> graphs, std::span<const VertexSet> sets);

GraphClassification classify_graph(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_cluster_graph(const Graph& g);
bool is_forest(const Graph& g);
Girth girth(const Graph& g);

/// True iff g - z belongs to `target`.
bool validate_deletion_set(const Graph& g, const VertexSet& z, GraphClass target);

/// g[keep]; vertex i of the result is keep.sorted()[i].
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph remove_vertices(const Graph& g, const VertexSet& drop);
Graph disjoint_union(std::span<const Graph> graphs);

/// Exhaustive permutation search; refuses graphs above 8 vertices.
bool are_isomorphic_small(const Graph& a, const Graph& b);

/// Connected components as ascending vertex lists.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace crosscomp
