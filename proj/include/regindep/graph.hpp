#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "regindep/vertex_set.hpp"

namespace regindep {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency rows are bitsets; construction rejects loops and out-of-range
/// endpoints and silently merges duplicate edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return m_; }

    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    int degree(Vertex v) const { return degree_[v]; }
    std::span<const int> degrees() const { return degree_; }

    int min_degree() const;
    int max_degree() const;
    bool is_regular() const;

    VertexSet all_vertices() const { return VertexSet::full(order()); }

    /// Edges (u, v) with u < v, ordered by u then v.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;

    std::vector<VertexSet> adj_;
    std::vector<int> degree_;
    int m_ = 0;
};

/// Mutable staging area used by generators; `build()` freezes it.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    int order() const { return static_cast<int>(adj_.size()); }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    /// Appends an isolated vertex and returns its index.
    Vertex add_vertex();

    Graph build() const;

private:
    void check(Vertex v) const;
    std::vector<VertexSet> adj_;
};

/// Degree-class partition {D_i(G)}. Only nonempty classes are stored.
struct DegreeProfile {
    std::map<int, VertexSet> classes;
    int min_degree = 0;
    int max_degree = 0;
    /// |D_{>=3}|.
    int big_degree_count = 0;
    /// Repetition number: largest class size.
    int rep = 0;

    int count(int degree) const
    {
        auto it = classes.find(degree);
        return it == classes.end() ? 0 : it->second.size();
    }
};

DegreeProfile degree_profile(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced by `vertices`, relabeled 0..|s|-1 in the given order.
/// Throws PreconditionError on an out-of-range or repeated index.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// G[D_j(G)] together with the host labels of its vertices.
struct DegreeClassSubgraph {
    int source_degree = 0;
    std::vector<Vertex> vertices;
    Graph induced;
};

DegreeClassSubgraph degree_class_subgraph(const Graph& g, int degree);

struct LineGraph {
    Graph graph;
    /// Vertex i of `graph` is edge `edges[i]` of the source graph.
    std::vector<Edge> edges;
};

LineGraph line_graph(const Graph& g);

/// Breadth-first distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Largest shortest-path distance; std::nullopt stands for infinity
/// (disconnected graph). The graphs on 0 and 1 vertices have diameter 0.
std::optional<int> diameter(const Graph& g);

/// Maximum degree of g[s].
int induced_max_degree(const Graph& g, const VertexSet& s);

}  // namespace regindep
