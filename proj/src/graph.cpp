#include "regindep/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "regindep/errors.hpp"

namespace regindep {

Graph::Graph(int n)
    : adj_(static_cast<std::size_t>(n), VertexSet(n)), degree_(static_cast<std::size_t>(n), 0)
{
}

Graph::Graph(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    *this = b.build();
}

int Graph::min_degree() const
{
    return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

int Graph::max_degree() const
{
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

bool Graph::is_regular() const
{
    return min_degree() == max_degree();
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(int n)
{
    if (n < 0)
        throw PreconditionError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void GraphBuilder::check(Vertex v) const
{
    if (v < 0 || v >= order())
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(order()));
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check(u);
    check(v);
    if (u == v)
        throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check(u);
    check(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
}

Vertex GraphBuilder::add_vertex()
{
    int n = order() + 1;
    std::vector<VertexSet> grown(static_cast<std::size_t>(n), VertexSet(n));
    for (Vertex u = 0; u + 1 < n; ++u)
        adj_[u].for_each([&](Vertex v) { grown[u].insert(v); });
    adj_ = std::move(grown);
    return n - 1;
}

Graph GraphBuilder::build() const
{
    Graph g;
    g.adj_ = adj_;
    g.degree_.resize(adj_.size());
    int twice_m = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        g.degree_[v] = adj_[v].size();
        twice_m += g.degree_[v];
    }
    g.m_ = twice_m / 2;
    return g;
}

DegreeProfile degree_profile(const Graph& g)
{
    DegreeProfile p;
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v) {
        auto [it, fresh] = p.classes.try_emplace(g.degree(v), n);
        it->second.insert(v);
    }
    if (!p.classes.empty()) {
        p.min_degree = p.classes.begin()->first;
        p.max_degree = p.classes.rbegin()->first;
    }
    for (const auto& [d, cls] : p.classes) {
        const int c = cls.size();
        p.rep = std::max(p.rep, c);
        if (d >= 3)
            p.big_degree_count += c;
    }
    return p;
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return b.build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    VertexSet seen(g.order());
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.order())
            throw PreconditionError("induced_subgraph: vertex " + std::to_string(v) +
                                    " out of range");
        if (seen.contains(v))
            throw PreconditionError("induced_subgraph: repeated vertex " + std::to_string(v));
        seen.insert(v);
    }
    const int s = static_cast<int>(vertices.size());
    GraphBuilder b(s);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                b.add_edge(i, j);
    return b.build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices)
{
    auto list = vertices.to_vector();
    return induced_subgraph(g, list);
}

DegreeClassSubgraph degree_class_subgraph(const Graph& g, int degree)
{
    DegreeClassSubgraph out;
    out.source_degree = degree;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == degree)
            out.vertices.push_back(v);
    out.induced = induced_subgraph(g, out.vertices);
    return out;
}

LineGraph line_graph(const Graph& g)
{
    LineGraph lg;
    lg.edges = g.edges();
    const int m = static_cast<int>(lg.edges.size());
    // incidence[v] = indices of edges touching v
    std::vector<std::vector<int>> incidence(static_cast<std::size_t>(g.order()));
    for (int e = 0; e < m; ++e) {
        incidence[lg.edges[e].first].push_back(e);
        incidence[lg.edges[e].second].push_back(e);
    }
    GraphBuilder b(m);
    for (const auto& star : incidence)
        for (std::size_t i = 0; i < star.size(); ++i)
            for (std::size_t j = i + 1; j < star.size(); ++j)
                b.add_edge(star[i], star[j]);
    lg.graph = b.build();
    return lg;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        g.neighbors(u).for_each([&](Vertex v) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        });
    }
    return dist;
}

bool is_connected(const Graph& g)
{
    if (g.order() <= 1)
        return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::optional<int> diameter(const Graph& g)
{
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        for (int d : bfs_distances(g, s)) {
            if (d < 0)
                return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

int induced_max_degree(const Graph& g, const VertexSet& s)
{
    int best = 0;
    s.for_each([&](Vertex v) { best = std::max(best, g.neighbors(v).intersection_size(s)); });
    return best;
}

}  // namespace regindep
