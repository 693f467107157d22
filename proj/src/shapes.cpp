#include "regindep/shapes.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <string>
#include <vector>

#include "regindep/errors.hpp"

namespace regindep {
namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

void require_cap(const Graph& g, int cap, const char* what)
{
    if (g.order() > cap)
        throw CapExceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                          " exceeds cap " + std::to_string(cap));
}

BoostGraph to_boost(const Graph& g, bool apex)
{
    const int n = g.order();
    BoostGraph b(static_cast<std::size_t>(apex ? n + 1 : n));
    for (const auto& [u, v] : g.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), b);
    if (apex)
        for (int v = 0; v < n; ++v)
            boost::add_edge(static_cast<std::size_t>(n), static_cast<std::size_t>(v), b);
    return b;
}

class TwoFactorSearch {
public:
    explicit TwoFactorSearch(const Graph& g)
        : g_(g), need_(static_cast<std::size_t>(g.order()), 2), used_(static_cast<std::size_t>(g.order()),
                                                                        VertexSet(g.order())) {}

    bool run() { return next_vertex(); }

private:
    bool next_vertex()
    {
        Vertex v = 0;
        while (v < g_.order() && need_[v] == 0)
            ++v;
        if (v == g_.order())
            return true;
        return extend(v, 0);
    }

    // Give v another subgraph edge to a neighbor u >= from.
    bool extend(Vertex v, Vertex from)
    {
        if (need_[v] == 0)
            return next_vertex();
        for (Vertex u = g_.neighbors(v).next(from); u >= 0; u = g_.neighbors(v).next(u + 1)) {
            if (need_[u] == 0 || used_[v].contains(u))
                continue;
            --need_[v];
            --need_[u];
            used_[v].insert(u);
            used_[u].insert(v);
            if (extend(v, u + 1))
                return true;
            used_[v].erase(u);
            used_[u].erase(v);
            ++need_[v];
            ++need_[u];
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> need_;
    std::vector<VertexSet> used_;
};

}  // namespace

int maximum_matching_size(const Graph& g)
{
    require_cap(g, kMatchingCap, "matching");
    BoostGraph b = to_boost(g, false);
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(boost::num_vertices(b));
    boost::edmonds_maximum_cardinality_matching(b, &mate[0]);
    return static_cast<int>(boost::matching_size(b, &mate[0]));
}

bool has_perfect_matching(const Graph& g)
{
    if (g.order() % 2 != 0)
        return false;
    return 2 * maximum_matching_size(g) == g.order();
}

bool has_two_factor(const Graph& g)
{
    require_cap(g, kTwoFactorCap, "2-factor");
    if (g.order() < 3 || g.min_degree() < 2)
        return false;
    return TwoFactorSearch(g).run();
}

bool is_planar(const Graph& g)
{
    require_cap(g, kPlanarityCap, "planarity");
    if (g.order() >= 3 && g.size() > 3 * g.order() - 6)
        return false;
    BoostGraph b = to_boost(g, false);
    return boost::boyer_myrvold_planarity_test(b);
}

bool is_outerplanar(const Graph& g)
{
    require_cap(g, kPlanarityCap, "outerplanarity");
    if (g.order() >= 2 && g.size() > 2 * g.order() - 3)
        return false;
    BoostGraph b = to_boost(g, true);
    return boost::boyer_myrvold_planarity_test(b);
}

bool is_maximal_outerplanar(const Graph& g)
{
    return g.order() >= 2 && g.size() == 2 * g.order() - 3 && is_outerplanar(g);
}

bool is_maximal_planar(const Graph& g)
{
    return g.order() >= 3 && g.size() == 3 * g.order() - 6 && is_planar(g);
}

}  // namespace regindep
