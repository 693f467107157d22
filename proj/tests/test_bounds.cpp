#include <gtest/gtest.h>

#include <cmath>

#include "regindep/bounds.hpp"
#include "regindep/errors.hpp"
#include "regindep/families.hpp"
#include "regindep/shapes.hpp"

using namespace regindep;

TEST(Shapes, Predicates)
{
    EXPECT_TRUE(has_perfect_matching(make_path(8)));
    EXPECT_FALSE(has_perfect_matching(make_path(7)));
    EXPECT_FALSE(has_perfect_matching(make_star(4)));
    EXPECT_EQ(maximum_matching_size(make_cycle(7)), 3);

    EXPECT_TRUE(has_two_factor(make_cycle(6)));
    EXPECT_TRUE(has_two_factor(make_octahedron()));
    EXPECT_FALSE(has_two_factor(make_path(5)));
    // Two triangles sharing a vertex: no spanning 2-regular subgraph.
    EXPECT_FALSE(has_two_factor(Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})));
    EXPECT_TRUE(has_two_factor(make_complete_multipartite({3, 3})));

    EXPECT_TRUE(is_planar(make_complete(4)));
    EXPECT_FALSE(is_planar(make_complete(5)));
    EXPECT_FALSE(is_planar(make_complete_multipartite({3, 3})));
    EXPECT_TRUE(is_outerplanar(make_cycle(6)));
    EXPECT_FALSE(is_outerplanar(make_complete(4)));
    EXPECT_FALSE(is_outerplanar(make_complete_multipartite({2, 3})));
    for (int n = 3; n <= 12; ++n)
        EXPECT_TRUE(is_maximal_outerplanar(make_fan(n)));
    EXPECT_FALSE(is_maximal_outerplanar(make_cycle(5)));
    EXPECT_TRUE(is_maximal_planar(make_octahedron()));
    EXPECT_FALSE(is_maximal_planar(make_cycle(5)));

    EXPECT_THROW(is_planar(make_path(21)), CapExceeded);
    EXPECT_THROW(has_two_factor(make_cycle(15)), CapExceeded);
}

TEST(RepParams, Values)
{
    const auto p = rep_bound_params(make_path(8));
    EXPECT_EQ(p.min_degree, 1);
    EXPECT_DOUBLE_EQ(p.avg_degree, 14.0 / 8.0);
    EXPECT_DOUBLE_EQ(p.c, 2.5);
    ASSERT_TRUE(p.coefficient.has_value());
    const auto c6 = rep_bound_params(make_cycle(6));
    EXPECT_EQ(c6.b_num, 0);
    EXPECT_FALSE(c6.coefficient.has_value());
}

TEST(Thm51, Examples)
{
    LineGraphInstance p10(make_path(10), 2);
    const auto c = verify_thm51(p10);
    EXPECT_EQ(c.lhs, 7);
    EXPECT_EQ(c.chi, 1);
    EXPECT_EQ(c.chi_mode, ChiMode::Exact);
    EXPECT_EQ(c.verdict, Verdict::Holds);
    EXPECT_NEAR(c.rhs, std::cbrt(9.0) / 4, 1e-12);

    LineGraphInstance k4(make_complete(4), 0);
    EXPECT_EQ(verify_thm51(k4).verdict, Verdict::Holds);

    LineGraphInstance empty(Graph(3), 0);
    EXPECT_EQ(verify_thm51(empty).verdict, Verdict::NotApplicable);
}

TEST(Thm51, AllSmallGraphs)
{
    for (int n = 2; n <= 5; ++n)
        for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t) {
            if (g.size() == 0)
                return;
            for (int k = 0; k <= 2; ++k) {
                LineGraphInstance inst(g, k);
                ASSERT_EQ(verify_thm51(inst).verdict, Verdict::Holds);
            }
        });
}

TEST(Thm52, Examples)
{
    LineGraphInstance c6(make_cycle(6), 1);
    EXPECT_EQ(verify_thm52(c6).verdict, Verdict::NotApplicable);
    LineGraphInstance p8(make_path(8), 1);
    EXPECT_EQ(verify_thm52(p8).verdict, Verdict::Holds);
    LineGraphInstance isolated(Graph(3, {{0, 1}}), 0);
    EXPECT_THROW(verify_thm52(isolated), PreconditionError);
}

TEST(Cor51, Examples)
{
    LineGraphInstance oct(make_octahedron(), 1);
    const auto c = verify_cor51(oct);
    EXPECT_EQ(c.theorem, "cor5.1(2)");
    EXPECT_EQ(c.verdict, Verdict::Holds);

    LineGraphInstance star(make_star(10), 0);
    const auto s = verify_cor51(star);
    EXPECT_EQ(s.theorem, "cor5.1(1)");
    EXPECT_EQ(s.lhs, 1);
    EXPECT_EQ(s.chi, 9);
    EXPECT_EQ(s.verdict, Verdict::Holds);
    EXPECT_NEAR(s.rhs, 3 / (std::sqrt(30.0) * 9), 1e-12);

    LineGraphInstance cycle(make_cycle(5), 0);
    EXPECT_THROW(verify_cor51(cycle), PreconditionError);
}

TEST(Thm53, Examples)
{
    LineGraphInstance p8(make_path(8), 1);
    EXPECT_EQ(verify_thm53_54(p8, LgShape::TreePerfectMatching).verdict, Verdict::Holds);
    LineGraphInstance f8(make_fan(8), 1);
    EXPECT_EQ(verify_thm53_54(f8, LgShape::MaximalOuterplanar).verdict, Verdict::Holds);
    for (int k = 0; k <= 2; ++k) {
        LineGraphInstance oct(make_octahedron(), k);
        for (auto s : {LgShape::Triangulation2Factor, LgShape::Triangulation2FactorDelta4, LgShape::TriangulationDelta4})
            EXPECT_EQ(verify_thm53_54(oct, s).verdict, Verdict::Holds);
        EXPECT_THROW(verify_thm53_54(oct, LgShape::TriangulationDelta5), PreconditionError);
    }
    LineGraphInstance p7(make_path(7), 1);
    EXPECT_THROW(verify_thm53_54(p7, LgShape::TreePerfectMatching), PreconditionError);
}

TEST(Thm53, ShapeTable)
{
    EXPECT_EQ(shape_constant(LgShape::TreePerfectMatching), 6);
    EXPECT_EQ(shape_constant(LgShape::MaximalOuterplanar), 14);
    EXPECT_EQ(shape_constant(LgShape::Triangulation2Factor), 33);
    EXPECT_EQ(shape_constant(LgShape::Triangulation2FactorDelta4), 27);
    EXPECT_EQ(shape_constant(LgShape::Triangulation2FactorDelta5), 15);
    EXPECT_EQ(shape_constant(LgShape::TriangulationDelta4), 68);
    EXPECT_EQ(shape_constant(LgShape::TriangulationDelta5), 51);
    EXPECT_EQ(shape_theorem(LgShape::TriangulationDelta5), "thm5.4(2)");
}

TEST(RepLemmas, Examples)
{
    LineGraphInstance p10(make_path(10), 0);
    const auto l51 = verify_rep_lemma(p10, RepLemma::L51);
    EXPECT_EQ(l51.lhs, 7);
    EXPECT_FALSE(l51.k.has_value());
    EXPECT_EQ(l51.verdict, Verdict::Holds);

    LineGraphInstance p8(make_path(8), 0);
    const auto l54 = verify_rep_lemma(p8, RepLemma::L54TreePerfectMatching);
    EXPECT_EQ(l54.lhs, 5);
    EXPECT_EQ(l54.verdict, Verdict::Holds);

    LineGraphInstance oct(make_octahedron(), 1);
    EXPECT_EQ(verify_rep_lemma(oct, RepLemma::L54Triangulation2Factor).verdict, Verdict::Holds);
    const auto l55 = verify_rep_lemma(oct, RepLemma::L55Delta4);
    EXPECT_EQ(l55.verdict, Verdict::Holds);
    EXPECT_TRUE(l55.literal_verdict.has_value());
    EXPECT_EQ(l55.k, 1);
}

TEST(Certificates, NamedCorpusNeverFails)
{
    std::vector<Graph> corpus{make_octahedron(), make_icosahedron()};
    for (int n = 4; n <= 10; ++n)
        corpus.push_back(make_fan(n));
    for (int d = 0; d <= 2; ++d)
        corpus.push_back(make_apollonian(d));
    for (const Graph& g : corpus)
        for (int k = 0; k <= 2; ++k) {
            LineGraphInstance inst(g, k);
            const auto certs = all_applicable_certificates(inst);
            EXPECT_FALSE(certs.empty());
            for (const auto& c : certs)
                EXPECT_EQ(c.verdict == Verdict::Fails, false) << c.theorem << " " << c.graph_id;
        }
}

TEST(Certificates, RandomTrees)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 3 + static_cast<int>(seed % 12);
        const Graph tree = random_tree_with_diameter(n, 2 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 2)), seed);
        for (int k = 0; k <= 2; ++k) {
            LineGraphInstance inst(tree, k);
            for (const auto& c : all_applicable_certificates(inst))
                EXPECT_NE(c.verdict, Verdict::Fails) << c.theorem << " " << c.graph_id;
        }
    }
}
