#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "regindep/graph.hpp"

namespace regindep {

// Standard families. Vertices are labeled in the obvious order: paths and
// cycles along the walk, the star center is 0.
Graph make_empty(int n);
Graph make_complete(int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int n);

/// Parts occupy consecutive vertex ranges in the given order.
Graph make_complete_multipartite(const std::vector<int>& parts);

/// K_{1,r}(l_1, ..., l_r): leg i is a path of order legs[i] counted from the
/// center, so it adds legs[i]-1 vertices.
struct SpiderSpec {
    std::vector<int> legs;

    int leg_count() const { return static_cast<int>(legs.size()); }
    int order() const;
};

/// Center is vertex 0; each leg's vertices follow consecutively outward.
/// Requires r >= 3 and every leg order >= 2.
Graph make_spider(const SpiderSpec& spec);

/// Parameters of the canonical tree T(n,t) of order n and diameter n-t.
struct TntSpec {
    int n = 0;
    int t = 0;

    int h() const { return (n - t) / 2; }
    /// Legs, q, r of the construction actually used (see tnt_recipe_check).
    int q() const;
    int r() const;
    SpiderSpec spider() const;
};

struct TntTree {
    Graph tree;
    /// The unique vertex of degree q+1.
    Vertex center = 0;
};

/// Requires 2 <= t <= n-3.
TntTree make_tnt(const TntSpec& spec);

/// The literal recipe writes n-1 = qh + r in both parity cases. For odd n-t
/// that recipe yields a tree on n+1 vertices; make_tnt then decomposes n-2
/// instead. This record exposes both so callers can report the mismatch.
struct TntRecipeCheck {
    int n = 0;
    int t = 0;
    SpiderSpec literal_legs;
    int literal_order = 0;
    int literal_diameter = 0;
    bool literal_consistent = false;
    SpiderSpec used_legs;
};

TntRecipeCheck tnt_recipe_check(int n, int t);

enum class FigureTree { Fig1a, Fig1b, Fig2a, Fig2b, Fig2c, Fig2d, Fig3a, Fig3b };

struct FigureTreeId {
    FigureTree kind = FigureTree::Fig2b;
    /// Used by Fig1a and Fig1b.
    int n = 0;
    /// Used by Fig1a, Fig1b and Fig2a.
    int t = 0;
};

/// Degree profile and regular k-independence value (k >= 2) each example
/// tree is pinned to.
struct FigureExpectation {
    int n = 0;
    int t = 0;
    int n1 = 0;
    int n2 = 0;
    int big = 0;
    int alpha = 0;
};

FigureExpectation figure_expectation(const FigureTreeId& id);

/// Builds the example tree and checks it against figure_expectation();
/// a mismatch throws std::logic_error.
Graph make_figure_tree(const FigureTreeId& id);

std::string figure_name(const FigureTreeId& id);

struct SurgeryResult {
    Graph tree;
    Vertex z = 0;
    Vertex z_prime = 0;
    /// Neighbors of z' whose branches were re-attached at z.
    std::vector<Vertex> moved;
};

/// O_{z'->z}: z' keeps its neighbor toward z and its deepest other branch
/// (smallest index on ties); every remaining branch at z' is re-hung at z.
/// Order and leaf count are preserved and |D_{>=3}| drops by one.
SurgeryResult tree_surgery(const Graph& tree, Vertex z, Vertex z_prime);

/// Inverse operation O_{z'<-z}.
Graph reverse_surgery(const SurgeryResult& s);

/// Path on d+1 vertices, then each further vertex hangs off a uniformly
/// chosen vertex whose eccentricity is below d. Deterministic in `seed`.
Graph random_tree_with_diameter(int n, int d, std::uint64_t seed);

/// G(n, p) with a deterministic generator.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

Graph make_octahedron();
Graph make_icosahedron();
/// Fan F_n: apex 0 joined to every vertex of the path 1..n-1.
Graph make_fan(int n);
/// Depth 0 is K_3; each level stacks a vertex into every inner face.
Graph make_apollonian(int depth);
/// Triangle {0,1,2}, pendant 3 on vertex 2, isolated vertex 4.
Graph make_remark1();

/// Named instance by id: "octahedron", "icosahedron", "remark1",
/// "fan:<n>", "apollonian:<depth>". Throws PreconditionError if unknown.
Graph make_named(std::string_view id);

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

/// Graph whose graph6 adjacency bit vector, read most-significant bit
/// first, equals `mask`. Hence increasing masks are increasing graph6
/// strings.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Visits every labeled graph on n vertices in increasing mask order.
/// Throws CapExceeded when n > cap.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn, int cap = 7);

/// Same, restricted to masks in [begin, end).
template <typename Fn>
void for_each_labeled_graph_in(int n, std::uint64_t begin, std::uint64_t end, Fn&& fn);

void check_enumeration_cap(int n, int cap);

template <typename Fn>
void for_each_labeled_graph_in(int n, std::uint64_t begin, std::uint64_t end, Fn&& fn)
{
    for (std::uint64_t mask = begin; mask < end; ++mask)
        fn(graph_from_mask(n, mask), mask);
}

template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn, int cap)
{
    check_enumeration_cap(n, cap);
    for_each_labeled_graph_in(n, 0, labeled_graph_count(n), fn);
}

}  // namespace regindep
