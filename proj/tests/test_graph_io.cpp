#include <gtest/gtest.h>

#include "regindep/errors.hpp"
#include "regindep/families.hpp"
#include "regindep/graph_io.hpp"

using namespace regindep;

TEST(Graph6, KnownEncodings)
{
    EXPECT_EQ(encode_graph6(make_complete(3)), "Bw");
    EXPECT_EQ(encode_graph6(Graph(1)), "@");
    EXPECT_EQ(encode_graph6(Graph(0)), "?");
    EXPECT_EQ(encode_graph6(make_path(4)), "Ch");
    EXPECT_EQ(encode_graph6(make_cycle(5)), "Dhc");
}

TEST(Graph6, DecodeKnown)
{
    EXPECT_EQ(decode_graph6("Bw"), make_complete(3));
    EXPECT_EQ(decode_graph6(">>graph6<<Bw\n"), make_complete(3));
    EXPECT_EQ(decode_graph6("@"), Graph(1));
}

TEST(Graph6, RoundTripRandom)
{
    for (int n = 0; n <= 62; ++n)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Graph g = random_graph(n, 0.5, seed * 100 + static_cast<std::uint64_t>(n));
            EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
        }
}

TEST(Graph6, LongHeader)
{
    const Graph g = random_graph(100, 0.1, 7);
    const auto s = encode_graph6(g);
    EXPECT_EQ(s[0], '~');
    EXPECT_EQ(decode_graph6(s), g);
    const Graph h = random_graph(63, 0.2, 3);
    EXPECT_EQ(decode_graph6(encode_graph6(h)), h);
}

TEST(Graph6, RejectsMalformed)
{
    EXPECT_THROW(decode_graph6(""), ParseError);
    EXPECT_THROW(decode_graph6("B"), ParseError);      // truncated bit vector
    EXPECT_THROW(decode_graph6("Bww"), ParseError);    // extra byte
    EXPECT_THROW(decode_graph6("B\x7f"), ParseError);  // byte out of range
    EXPECT_THROW(decode_graph6("B "), ParseError);
    EXPECT_THROW(decode_graph6("B}"), ParseError);     // padding bit set
    EXPECT_THROW(decode_graph6("~?"), ParseError);     // truncated long header
}

TEST(EdgeList, WithHeader)
{
    const Graph g = parse_edge_list("5 4\n0 1\n1 2\n0 2\n2 3\n");
    EXPECT_EQ(g, make_remark1());
}

TEST(EdgeList, WithoutHeaderAndComments)
{
    const Graph g = parse_edge_list("# path\n0 1\n\n1 2   # middle\n2 3\n");
    EXPECT_EQ(g, make_path(4));
}

TEST(EdgeList, RoundTrip)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = random_graph(9, 0.3, seed);
        EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
    }
}

TEST(EdgeList, RejectsLoopsAndRepeats)
{
    EXPECT_EQ(parse_edge_list("0 0\n").order(), 0);
    EXPECT_THROW(parse_edge_list("0 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse_edge_list("0 1\n1 0\n"), ParseError);
    EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
}

TEST(GraphText, DetectsFormat)
{
    EXPECT_EQ(parse_graph_text("Bw\n"), make_complete(3));
    EXPECT_EQ(parse_graph_text("0 1\n1 2\n"), make_path(3));
}
