#include <gtest/gtest.h>

#include <set>

#include "regindep/errors.hpp"
#include "regindep/families.hpp"
#include "regindep/graph_io.hpp"
#include "regindep/shapes.hpp"

using namespace regindep;

namespace {

struct Counts {
    int n1 = 0, n2 = 0, big = 0;
};

Counts leaf_counts(const Graph& g)
{
    Counts c;
    for (int d : g.degrees()) {
        if (d == 1)
            ++c.n1;
        else if (d == 2)
            ++c.n2;
        else if (d >= 3)
            ++c.big;
    }
    return c;
}

}  // namespace

TEST(Families, Basics)
{
    EXPECT_EQ(make_path(2).size(), 1);
    const auto star = degree_profile(make_star(6));
    EXPECT_EQ(star.count(1), 5);
    EXPECT_EQ(star.count(5), 1);
    const Graph c7 = make_cycle(7);
    EXPECT_TRUE(c7.is_regular());
    EXPECT_EQ(c7.max_degree(), 2);
    EXPECT_EQ(diameter(c7), 3);
    EXPECT_THROW(make_cycle(2), PreconditionError);
    EXPECT_THROW(make_star(1), PreconditionError);
    EXPECT_THROW(make_path(0), PreconditionError);
}

TEST(Families, Multipartite)
{
    const Graph g = make_complete_multipartite({2, 2, 2});
    EXPECT_EQ(g.order(), 6);
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ(g.max_degree(), 4);
    const auto p = degree_profile(make_complete_multipartite({1, 2, 3}));
    EXPECT_EQ(p.count(5), 1);
    EXPECT_EQ(p.count(4), 2);
    EXPECT_EQ(p.count(3), 3);
    EXPECT_THROW(make_complete_multipartite({2, 0}), PreconditionError);
    EXPECT_THROW(make_complete_multipartite({3}), PreconditionError);
}

TEST(Spider, Examples)
{
    struct Case {
        std::vector<int> legs;
        int n, diam, n1, n2;
    };
    for (const auto& c : std::vector<Case>{{{5, 4, 4}, 11, 7, 3, 7},
                                           {{3, 3, 3, 3, 2}, 10, 4, 5, 4},
                                           {{3, 3, 2, 2, 2, 2, 2}, 10, 4, 7, 2}}) {
        const Graph g = make_spider(SpiderSpec{c.legs});
        EXPECT_EQ(g.order(), c.n);
        EXPECT_EQ(diameter(g), c.diam);
        const auto k = leaf_counts(g);
        EXPECT_EQ(k.n1, c.n1);
        EXPECT_EQ(k.n2, c.n2);
        EXPECT_EQ(k.big, 1);
        EXPECT_EQ(g.degree(0), static_cast<int>(c.legs.size()));
    }
    EXPECT_THROW(make_spider(SpiderSpec{{3, 3}}), PreconditionError);
    EXPECT_THROW(make_spider(SpiderSpec{{3, 3, 1}}), PreconditionError);
}

TEST(Tnt, T12_4)
{
    const TntSpec spec{12, 4};
    EXPECT_EQ(spec.h(), 4);
    EXPECT_EQ(spec.q(), 2);
    EXPECT_EQ(spec.r(), 3);
    EXPECT_EQ(spec.spider().legs, (std::vector<int>{5, 5, 4}));
    const auto t = make_tnt(spec);
    EXPECT_EQ(t.tree.order(), 12);
    EXPECT_EQ(diameter(t.tree), 8);
    const auto k = leaf_counts(t.tree);
    EXPECT_EQ(k.n1, 3);
    EXPECT_EQ(k.n2, 8);
    EXPECT_EQ(t.tree.degree(t.center), 3);
}

TEST(Tnt, AllParametersUpTo30)
{
    for (int n = 5; n <= 30; ++n)
        for (int t = 2; t <= n - 3; ++t) {
            const TntSpec spec{n, t};
            const auto tree = make_tnt(spec);
            const int q = spec.q();
            EXPECT_GE(q, 2) << n << "," << t;
            EXPECT_EQ(tree.tree.order(), n);
            EXPECT_TRUE(is_tree(tree.tree));
            EXPECT_EQ(diameter(tree.tree), n - t) << n << "," << t;
            const auto k = leaf_counts(tree.tree);
            EXPECT_EQ(k.n1, q + 1);
            EXPECT_EQ(k.n2, n - q - 2);
        }
}

TEST(Tnt, LiteralRecipeOddCase)
{
    // T(9,4): n-t odd. Writing n-1 = qh + r gives legs (4,3,3,3) on 10
    // vertices; the constructor uses n-2 = qh + r instead.
    const auto check = tnt_recipe_check(9, 4);
    EXPECT_EQ(check.literal_legs.legs, (std::vector<int>{4, 3, 3, 3}));
    EXPECT_EQ(check.literal_order, 10);
    EXPECT_FALSE(check.literal_consistent);
    EXPECT_EQ(check.used_legs.legs, (std::vector<int>{4, 3, 3, 2}));
    const auto even = tnt_recipe_check(12, 4);
    EXPECT_TRUE(even.literal_consistent);
}

TEST(FigureTrees, Profiles)
{
    struct Case {
        FigureTreeId id;
        int n1, n2, big;
    };
    for (const auto& c : std::vector<Case>{{{FigureTree::Fig2a, 0, 4}, 4, 4, 2},
                                           {{FigureTree::Fig2d, 0, 0}, 5, 1, 3},
                                           {{FigureTree::Fig3a, 0, 0}, 5, 4, 1},
                                           {{FigureTree::Fig3b, 0, 0}, 7, 2, 1},
                                           {{FigureTree::Fig2b, 0, 0}, 3, 8, 1},
                                           {{FigureTree::Fig2c, 0, 0}, 3, 7, 1},
                                           {{FigureTree::Fig1a, 16, 5}, 6, 10 - 4, 4},
                                           {{FigureTree::Fig1b, 16, 5}, 3, 12, 1}}) {
        const Graph g = make_figure_tree(c.id);
        const auto e = figure_expectation(c.id);
        EXPECT_TRUE(is_tree(g));
        EXPECT_EQ(g.order(), e.n);
        EXPECT_EQ(diameter(g), e.n - e.t);
        const auto k = leaf_counts(g);
        EXPECT_EQ(k.n1, c.n1) << figure_name(c.id);
        EXPECT_EQ(k.n2, c.n2) << figure_name(c.id);
        EXPECT_EQ(k.big, c.big) << figure_name(c.id);
    }
}

TEST(FigureTrees, Fig2bIsT12_4)
{
    EXPECT_EQ(make_figure_tree({FigureTree::Fig2b, 0, 0}), make_tnt({12, 4}).tree);
}

TEST(Surgery, Fig2aBranchVertices)
{
    const Graph g = make_figure_tree({FigureTree::Fig2a, 0, 4});
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3)
            branch.push_back(v);
    ASSERT_EQ(branch.size(), 2u);
    const auto s = tree_surgery(g, branch[0], branch[1]);
    EXPECT_TRUE(is_tree(s.tree));
    EXPECT_EQ(leaf_counts(s.tree).big, 1);
    EXPECT_EQ(leaf_counts(s.tree).n1, 4);
}

TEST(Surgery, RandomTreesKeepOrderAndLeaves)
{
    int applied = 0;
    for (std::uint64_t seed = 0; applied < 100 && seed < 1000; ++seed) {
        const int n = 8 + static_cast<int>(seed % 10);
        const Graph g = random_tree_with_diameter(n, 3 + static_cast<int>(seed % 3), seed);
        std::vector<Vertex> branch;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) >= 3)
                branch.push_back(v);
        if (branch.size() < 2)
            continue;
        ++applied;
        const auto before = leaf_counts(g);
        const auto s = tree_surgery(g, branch[0], branch[1]);
        const auto after = leaf_counts(s.tree);
        EXPECT_TRUE(is_tree(s.tree));
        EXPECT_EQ(s.tree.order(), n);
        EXPECT_EQ(after.n1, before.n1);
        EXPECT_EQ(after.big, before.big - 1);
        const Graph back = reverse_surgery(s);
        EXPECT_EQ(back, g);
    }
    EXPECT_EQ(applied, 100);
}

TEST(Surgery, RejectsBadVertices)
{
    const Graph g = make_figure_tree({FigureTree::Fig2a, 0, 4});
    EXPECT_THROW(tree_surgery(g, 1, 1), PreconditionError);
    EXPECT_THROW(tree_surgery(g, 0, 1), PreconditionError);
}

TEST(RandomTree, PrescribedDiameter)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 2 + static_cast<int>(seed % 17);
        const int d = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 1));
        if (d == 1 && n > 2)
            continue;
        const Graph g = random_tree_with_diameter(n, d, seed);
        EXPECT_TRUE(is_tree(g));
        EXPECT_EQ(g.order(), n);
        EXPECT_EQ(diameter(g), d);
    }
    EXPECT_EQ(diameter(random_tree_with_diameter(12, 8, 5)), 8);
    EXPECT_EQ(random_tree_with_diameter(9, 8, 1), make_path(9));
    EXPECT_EQ(random_tree_with_diameter(12, 6, 42), random_tree_with_diameter(12, 6, 42));
    EXPECT_THROW(random_tree_with_diameter(5, 5, 0), PreconditionError);
}

TEST(Named, Instances)
{
    const Graph oct = make_octahedron();
    EXPECT_EQ(oct.order(), 6);
    EXPECT_EQ(oct.size(), 12);
    EXPECT_TRUE(oct.is_regular());
    EXPECT_EQ(oct.min_degree(), 4);
    EXPECT_TRUE(is_maximal_planar(oct));

    const Graph ico = make_icosahedron();
    EXPECT_EQ(ico.order(), 12);
    EXPECT_EQ(ico.size(), 30);
    EXPECT_TRUE(ico.is_regular());
    EXPECT_EQ(ico.min_degree(), 5);
    EXPECT_TRUE(is_maximal_planar(ico));

    const Graph fan = make_fan(6);
    EXPECT_EQ(fan.size(), 9);
    EXPECT_TRUE(is_maximal_outerplanar(fan));

    for (int depth = 0; depth <= 2; ++depth)
        EXPECT_TRUE(is_maximal_planar(make_apollonian(depth)));
    EXPECT_EQ(make_apollonian(2).order(), 7);

    EXPECT_EQ(make_named("remark1"), make_remark1());
    EXPECT_EQ(make_named("fan:7"), make_fan(7));
    EXPECT_THROW(make_named("petersen"), PreconditionError);
}

TEST(Enumeration, Counts)
{
    for (auto [n, count] : std::vector<std::pair<int, std::uint64_t>>{{1, 1}, {3, 8}, {4, 64}, {6, 32768}}) {
        std::uint64_t seen = 0;
        for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t) {
            EXPECT_EQ(g.order(), n);
            ++seen;
        });
        EXPECT_EQ(seen, count);
    }
    EXPECT_THROW(for_each_labeled_graph(8, [](const Graph&, std::uint64_t) {}), CapExceeded);
}

TEST(Enumeration, DistinctAndOrderedByGraph6)
{
    std::string previous;
    std::set<std::string> seen;
    for_each_labeled_graph(5, [&](const Graph& g, std::uint64_t) {
        const auto s = encode_graph6(g);
        EXPECT_LT(previous, s);
        previous = s;
        seen.insert(s);
    });
    EXPECT_EQ(seen.size(), 1024u);
}
