#include <gtest/gtest.h>

#include "regindep/errors.hpp"
#include "regindep/families.hpp"
#include "regindep/scans.hpp"

using namespace regindep;

TEST(Extremal, Examples)
{
    const auto r = verify_extremal(make_remark1(), 0);
    EXPECT_EQ(r.alpha, 1);
    EXPECT_TRUE(r.thm41.lhs);
    EXPECT_TRUE(r.thm41.rhs);

    const auto c5 = verify_extremal(make_cycle(5), 2);
    EXPECT_TRUE(c5.thm42.lhs);
    EXPECT_TRUE(c5.thm42.rhs);
    EXPECT_TRUE(c5.thm41.agree());
}

TEST(Prop61, Examples)
{
    const auto r = verify_prop61(make_remark1(), 0);
    EXPECT_EQ(r.sum, 3);
    EXPECT_EQ(r.product, 2);
    EXPECT_TRUE(r.lhs);
    EXPECT_TRUE(r.rhs);

    const auto k4 = verify_prop61(make_complete(4), 0);
    EXPECT_EQ(k4.sum, 5);
    EXPECT_FALSE(k4.lhs);
    EXPECT_FALSE(k4.cond_small_classes);
    EXPECT_FALSE(k4.rhs);
}

TEST(Prop62, Examples)
{
    const auto e4 = verify_prop62(Graph(4), 3);
    EXPECT_TRUE(e4.sum_is_2n);
    EXPECT_TRUE(e4.product_is_n2);
    EXPECT_TRUE(e4.regular_and_k_large);
    for (int k = 0; k <= 4; ++k) {
        const auto p4 = verify_prop62(make_path(4), k);
        EXPECT_FALSE(p4.sum_is_2n);
        EXPECT_FALSE(p4.product_is_n2);
        EXPECT_FALSE(p4.regular_and_k_large);
    }
    const auto c5 = verify_prop62(make_cycle(5), 4);
    EXPECT_TRUE(c5.agree());
    EXPECT_TRUE(c5.sum_is_2n);
}

TEST(NGScan, Remark1AndC5Records)
{
    const auto report = ng_scan(5, {0, 4});
    EXPECT_TRUE(report.violations.empty());
    EXPECT_EQ(report.records.size(), 2048u);
    // Edge bits of remark1 ({0,1},{0,2},{1,2},{2,3}) in graph6 order.
    const auto find = [&](const Graph& g, int k) {
        for (const auto& r : report.records)
            if (graph_from_mask(5, r.mask) == g && r.k == k)
                return r;
        return NGRecord{};
    };
    const auto rem = find(make_remark1(), 0);
    EXPECT_EQ(rem.sum(), 3);
    EXPECT_EQ(rem.product(), 2);
    const auto c5 = find(make_cycle(5), 4);
    EXPECT_EQ(c5.sum(), 10);
    EXPECT_EQ(c5.product(), 25);
}

TEST(NGScan, ExhaustiveSmallOrders)
{
    for (int n = 2; n <= 5; ++n) {
        const auto report = ng_scan(n, {0, 1, 2, 5});
        EXPECT_TRUE(report.violations.empty()) << n;
        EXPECT_EQ(report.checked.at("prop6.1"), labeled_graph_count(n) * 4);
    }
}

TEST(NGScan, DeterministicAcrossThreadCounts)
{
    ScanOptions one;
    ScanOptions many;
    many.threads = 4;
    const auto a = ng_scan(5, {0, 1, 2}, one);
    const auto b = ng_scan(5, {0, 1, 2}, many);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].mask, b.records[i].mask);
        EXPECT_EQ(a.records[i].k, b.records[i].k);
        EXPECT_EQ(a.records[i].a_g, b.records[i].a_g);
        EXPECT_EQ(a.records[i].a_gbar, b.records[i].a_gbar);
    }
    EXPECT_EQ(a.checked, b.checked);
}

TEST(NGScan, CapAndRange)
{
    EXPECT_THROW(ng_scan(8, {0}), CapExceeded);
    EXPECT_THROW(ng_scan(1, {0}), PreconditionError);
}
