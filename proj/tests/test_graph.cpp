#include <gtest/gtest.h>

#include <algorithm>

#include "regindep/errors.hpp"
#include "regindep/families.hpp"
#include "regindep/graph.hpp"

using namespace regindep;

TEST(DegreeProfile, PathP4)
{
    const auto p = degree_profile(make_path(4));
    EXPECT_EQ(p.count(1), 2);
    EXPECT_EQ(p.count(2), 2);
    EXPECT_EQ(p.rep, 2);
    EXPECT_EQ(p.big_degree_count, 0);
}

TEST(DegreeProfile, CompleteK4)
{
    const auto p = degree_profile(make_complete(4));
    EXPECT_EQ(p.count(3), 4);
    EXPECT_EQ(p.rep, 4);
    EXPECT_EQ(p.classes.size(), 1u);
}

TEST(DegreeProfile, Remark1Graph)
{
    const auto p = degree_profile(make_remark1());
    EXPECT_EQ(p.count(0), 1);
    EXPECT_EQ(p.count(1), 1);
    EXPECT_EQ(p.count(2), 2);
    EXPECT_EQ(p.count(3), 1);
    EXPECT_EQ(p.min_degree, 0);
    EXPECT_EQ(p.max_degree, 3);
}

TEST(DegreeProfile, ClassesPartitionVertices)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = random_graph(1 + static_cast<int>(seed % 15), 0.4, seed);
        const auto p = degree_profile(g);
        VertexSet seen(g.order());
        int total = 0;
        for (const auto& [d, cls] : p.classes) {
            EXPECT_FALSE(cls.empty());
            EXPECT_FALSE(seen.intersects(cls));
            seen |= cls;
            total += cls.size();
            cls.for_each([&](Vertex v) { EXPECT_EQ(g.degree(v), d); });
        }
        EXPECT_EQ(total, g.order());
        const int spread = p.max_degree - p.min_degree + 1;
        EXPECT_GE(p.rep, (g.order() + spread - 1) / spread);
    }
}

TEST(Graph, HandshakeAndSymmetry)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = random_graph(12, 0.3, seed);
        int sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            sum += g.degree(v);
            EXPECT_FALSE(g.adjacent(v, v));
            g.neighbors(v).for_each([&](Vertex u) { EXPECT_TRUE(g.adjacent(u, v)); });
        }
        EXPECT_EQ(sum, 2 * g.size());
    }
}

TEST(Graph, BuilderRejectsLoopsAndRange)
{
    GraphBuilder b(3);
    EXPECT_THROW(b.add_edge(1, 1), PreconditionError);
    EXPECT_THROW(b.add_edge(0, 3), PreconditionError);
}

TEST(Lemma41, TwoVerticesShareADegree)
{
    for (int n = 2; n <= 6; ++n)
        for_each_labeled_graph(n, [](const Graph& g, std::uint64_t) { EXPECT_GE(degree_profile(g).rep, 2); });
}

TEST(Complement, OfCompleteIsEmpty)
{
    const Graph c = complement(make_complete(4));
    EXPECT_EQ(c.order(), 4);
    EXPECT_EQ(c.size(), 0);
}

TEST(Complement, IsAnInvolution)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = random_graph(10, 0.5, seed);
        EXPECT_EQ(complement(complement(g)), g);
    }
}

TEST(Complement, C5IsSelfComplementary)
{
    // A connected 2-regular graph on 5 vertices is C_5.
    const Graph c = complement(make_cycle(5));
    EXPECT_TRUE(c.is_regular());
    EXPECT_EQ(c.max_degree(), 2);
    EXPECT_TRUE(is_connected(c));
}

TEST(Complement, DegreeClassesMirror)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = random_graph(9, 0.5, seed);
        const auto p = degree_profile(g);
        const auto q = degree_profile(complement(g));
        for (const auto& [d, cls] : p.classes) {
            ASSERT_TRUE(q.classes.count(g.order() - 1 - d));
            EXPECT_EQ(q.classes.at(g.order() - 1 - d), cls);
        }
        EXPECT_EQ(p.classes.size(), q.classes.size());
    }
}

TEST(InducedSubgraph, PathMiddle)
{
    const std::vector<Vertex> s{2, 3, 4};
    EXPECT_EQ(induced_subgraph(make_path(5), s), make_path(3));
}

TEST(InducedSubgraph, EmptySelection)
{
    const std::vector<Vertex> s;
    EXPECT_EQ(induced_subgraph(make_path(5), s).order(), 0);
}

TEST(InducedSubgraph, CompleteTriple)
{
    const std::vector<Vertex> s{4, 0, 2};
    EXPECT_EQ(induced_subgraph(make_complete(5), s), make_complete(3));
}

TEST(InducedSubgraph, KeepsInputOrder)
{
    const std::vector<Vertex> s{3, 2, 1, 0};
    const Graph h = induced_subgraph(make_path(5), s);
    EXPECT_TRUE(h.adjacent(0, 1));
    EXPECT_TRUE(h.adjacent(2, 3));
    EXPECT_FALSE(h.adjacent(0, 3));
}

TEST(InducedSubgraph, RejectsBadIndices)
{
    const std::vector<Vertex> out_of_range{0, 7};
    const std::vector<Vertex> repeated{1, 1};
    EXPECT_THROW(induced_subgraph(make_path(5), out_of_range), PreconditionError);
    EXPECT_THROW(induced_subgraph(make_path(5), repeated), PreconditionError);
}

TEST(DegreeClassSubgraph, VerticesKeepHostDegree)
{
    const Graph g = make_complete_multipartite({1, 2, 3});
    const auto sub = degree_class_subgraph(g, 4);
    EXPECT_EQ(sub.vertices.size(), 2u);
    for (Vertex v : sub.vertices)
        EXPECT_EQ(g.degree(v), 4);
    EXPECT_EQ(sub.induced.size(), 0);
}

TEST(LineGraph, PathP3)
{
    EXPECT_EQ(line_graph(make_path(3)).graph, make_path(2));
}

TEST(LineGraph, StarGivesTriangle)
{
    EXPECT_EQ(line_graph(make_star(4)).graph, make_complete(3));
}

TEST(LineGraph, DegreeIdentity)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = random_graph(10, 0.35, seed);
        const auto lg = line_graph(g);
        ASSERT_EQ(lg.graph.order(), g.size());
        for (int i = 0; i < lg.graph.order(); ++i) {
            const auto [u, v] = lg.edges[i];
            EXPECT_TRUE(g.adjacent(u, v));
            EXPECT_EQ(lg.graph.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }
}

TEST(Diameter, Basics)
{
    EXPECT_EQ(diameter(make_path(7)), 6);
    for (int n = 2; n <= 8; ++n)
        EXPECT_EQ(diameter(make_complete(n)), 1);
    EXPECT_EQ(diameter(make_cycle(7)), 3);
    EXPECT_EQ(diameter(make_remark1()), std::nullopt);
    EXPECT_EQ(diameter(Graph(1)), 0);
}

TEST(Trees, Recognition)
{
    EXPECT_TRUE(is_tree(make_path(6)));
    EXPECT_TRUE(is_tree(make_star(6)));
    EXPECT_FALSE(is_tree(make_cycle(6)));
    EXPECT_FALSE(is_tree(make_empty(2)));
}
