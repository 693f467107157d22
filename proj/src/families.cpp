#include "regindep/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <random>
#include <stdexcept>

#include "regindep/errors.hpp"

namespace regindep {

Graph make_empty(int n)
{
    if (n < 0)
        throw PreconditionError("make_empty: n < 0");
    return Graph(n);
}

Graph make_complete(int n)
{
    if (n < 1)
        throw PreconditionError("make_complete: n must be >= 1");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph make_path(int n)
{
    if (n < 1)
        throw PreconditionError("make_path: n must be >= 1");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

Graph make_cycle(int n)
{
    if (n < 3)
        throw PreconditionError("make_cycle: n must be >= 3");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph make_star(int n)
{
    if (n < 2)
        throw PreconditionError("make_star: n must be >= 2");
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.add_edge(0, v);
    return b.build();
}

Graph make_complete_multipartite(const std::vector<int>& parts)
{
    if (parts.size() < 2)
        throw PreconditionError("make_complete_multipartite: need at least 2 parts");
    std::vector<int> start;
    int n = 0;
    for (int p : parts) {
        if (p < 1)
            throw PreconditionError("make_complete_multipartite: empty part");
        start.push_back(n);
        n += p;
    }
    GraphBuilder b(n);
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t c = a + 1; c < parts.size(); ++c)
            for (int i = 0; i < parts[a]; ++i)
                for (int j = 0; j < parts[c]; ++j)
                    b.add_edge(start[a] + i, start[c] + j);
    return b.build();
}

int SpiderSpec::order() const
{
    int n = 1;
    for (int l : legs)
        n += l - 1;
    return n;
}

Graph make_spider(const SpiderSpec& spec)
{
    if (spec.leg_count() < 3)
        throw PreconditionError("make_spider: need at least 3 legs");
    for (int l : spec.legs)
        if (l < 2)
            throw PreconditionError("make_spider: leg order must be >= 2");
    GraphBuilder b(spec.order());
    Vertex next = 1;
    for (int l : spec.legs) {
        Vertex prev = 0;
        for (int i = 1; i < l; ++i) {
            b.add_edge(prev, next);
            prev = next++;
        }
    }
    return b.build();
}

namespace {

void check_tnt(int n, int t)
{
    if (t < 2 || t > n - 3)
        throw PreconditionError("T(n,t) requires 2 <= t <= n-3, got n=" + std::to_string(n) +
                                " t=" + std::to_string(t));
}

// Writes total = q*h + r with q >= 0 and 1 <= r <= h.
std::pair<int, int> split(int total, int h)
{
    int q = (total - 1) / h;
    return {q, total - q * h};
}

SpiderSpec tnt_legs(int n, int t, int q, int r)
{
    const int h = (n - t) / 2;
    SpiderSpec s;
    s.legs.push_back((n - t) % 2 == 0 ? h + 1 : h + 2);
    s.legs.push_back(h + 1);
    for (int i = 0; i < q - 2; ++i)
        s.legs.push_back(h + 1);
    s.legs.push_back(r + 1);
    return s;
}

}  // namespace

int TntSpec::q() const
{
    check_tnt(n, t);
    const bool even = (n - t) % 2 == 0;
    return split(even ? n - 1 : n - 2, h()).first;
}

int TntSpec::r() const
{
    check_tnt(n, t);
    const bool even = (n - t) % 2 == 0;
    return split(even ? n - 1 : n - 2, h()).second;
}

SpiderSpec TntSpec::spider() const
{
    return tnt_legs(n, t, q(), r());
}

TntTree make_tnt(const TntSpec& spec)
{
    check_tnt(spec.n, spec.t);
    TntTree out;
    out.tree = make_spider(spec.spider());
    out.center = 0;
    if (out.tree.order() != spec.n || diameter(out.tree) != spec.n - spec.t)
        throw std::logic_error("make_tnt: construction does not match (n, t)");
    return out;
}

TntRecipeCheck tnt_recipe_check(int n, int t)
{
    check_tnt(n, t);
    TntRecipeCheck c;
    c.n = n;
    c.t = t;
    const int h = (n - t) / 2;
    auto [q, r] = split(n - 1, h);
    c.literal_legs = tnt_legs(n, t, q, r);
    c.literal_order = c.literal_legs.order();
    c.literal_diameter = c.literal_legs.legs[0] + c.literal_legs.legs[1] - 2;
    c.literal_consistent = c.literal_order == n && c.literal_diameter == n - t;
    c.used_legs = TntSpec{n, t}.spider();
    return c;
}

FigureExpectation figure_expectation(const FigureTreeId& id)
{
    const int n = id.n;
    const int t = id.t;
    switch (id.kind) {
    case FigureTree::Fig1a:
        return {n, t, t + 1, n - 2 * t, t - 1, n - 2 * t};
    case FigureTree::Fig1b:
        return {n, t, 3, n - 4, 1, n - 4};
    case FigureTree::Fig2a:
        return {3 * t - 2, t, t, t, t - 2, t};
    case FigureTree::Fig2b:
        return {12, 4, 3, 8, 1, 8};
    case FigureTree::Fig2c:
        return {11, 4, 3, 7, 1, 7};
    case FigureTree::Fig2d:
        return {9, 4, 5, 1, 3, 5};
    case FigureTree::Fig3a:
        return {10, 6, 5, 4, 1, 5};
    case FigureTree::Fig3b:
        return {10, 6, 7, 2, 1, 7};
    }
    throw PreconditionError("unknown figure tree");
}

std::string figure_name(const FigureTreeId& id)
{
    switch (id.kind) {
    case FigureTree::Fig1a:
        return "fig1a(n=" + std::to_string(id.n) + ",t=" + std::to_string(id.t) + ")";
    case FigureTree::Fig1b:
        return "fig1b(n=" + std::to_string(id.n) + ",t=" + std::to_string(id.t) + ")";
    case FigureTree::Fig2a:
        return "fig2a(t=" + std::to_string(id.t) + ")";
    case FigureTree::Fig2b:
        return "fig2b";
    case FigureTree::Fig2c:
        return "fig2c";
    case FigureTree::Fig2d:
        return "fig2d";
    case FigureTree::Fig3a:
        return "fig3a";
    case FigureTree::Fig3b:
        return "fig3b";
    }
    return "?";
}

namespace {

Graph build_figure(const FigureTreeId& id)
{
    const int n = id.n;
    const int t = id.t;
    switch (id.kind) {
    case FigureTree::Fig1a: {
        // path v_1..v_{n-t+1} = 0..n-t, leaves on v_2..v_t
        if (t < 2 || n < 2 * t)
            throw PreconditionError("fig1a requires t >= 2 and n >= 2t");
        GraphBuilder b(n);
        const int len = n - t + 1;
        for (Vertex v = 0; v + 1 < len; ++v)
            b.add_edge(v, v + 1);
        for (int j = 1; j <= t - 1; ++j)
            b.add_edge(j, len + j - 1);
        return b.build();
    }
    case FigureTree::Fig1b: {
        // pendant path of t-1 vertices at v_{floor((n-t)/2)+1}
        if (t < 2 || t - 1 > (n - t) / 2 || n < 7)
            throw PreconditionError("fig1b requires t >= 2, n >= 7, t-1 <= (n-t)/2");
        GraphBuilder b(n);
        const int len = n - t + 1;
        for (Vertex v = 0; v + 1 < len; ++v)
            b.add_edge(v, v + 1);
        Vertex prev = (n - t) / 2;
        for (Vertex w = len; w < n; ++w) {
            b.add_edge(prev, w);
            prev = w;
        }
        return b.build();
    }
    case FigureTree::Fig2a: {
        // path v_1..v_{2t-1} = 0..2t-2, v'_j = 2t-2+j
        if (t < 4)
            throw PreconditionError("fig2a requires t >= 4");
        const int order = 3 * t - 2;
        GraphBuilder b(order);
        for (Vertex v = 0; v + 1 < 2 * t - 1; ++v)
            b.add_edge(v, v + 1);
        auto vp = [&](int j) { return 2 * t - 2 + j; };
        for (int j = 1; j <= t - 2; ++j)
            b.add_edge(j, vp(j));  // v_{j+1} has index j
        b.add_edge(vp(t - 2), vp(t - 1));
        return b.build();
    }
    case FigureTree::Fig2b:
        return make_spider({{5, 5, 4}});
    case FigureTree::Fig2c:
        return make_spider({{5, 4, 4}});
    case FigureTree::Fig2d: {
        GraphBuilder b(9);
        for (Vertex v = 0; v < 5; ++v)
            b.add_edge(v, v + 1);
        b.add_edge(1, 6);
        b.add_edge(2, 7);
        b.add_edge(3, 8);
        return b.build();
    }
    case FigureTree::Fig3a:
        return make_spider({{3, 3, 3, 3, 2}});
    case FigureTree::Fig3b:
        return make_spider({{3, 3, 2, 2, 2, 2, 2}});
    }
    throw PreconditionError("unknown figure tree");
}

}  // namespace

Graph make_figure_tree(const FigureTreeId& id)
{
    Graph g = build_figure(id);
    const auto want = figure_expectation(id);
    const auto p = degree_profile(g);
    const bool ok = is_tree(g) && g.order() == want.n && diameter(g) == want.n - want.t &&
                    p.count(1) == want.n1 && p.count(2) == want.n2 &&
                    p.big_degree_count == want.big;
    if (!ok)
        throw std::logic_error("figure tree " + figure_name(id) +
                               " does not match its stated profile");
    return g;
}

SurgeryResult tree_surgery(const Graph& tree, Vertex z, Vertex z_prime)
{
    if (!is_tree(tree))
        throw PreconditionError("tree_surgery: input is not a tree");
    const int n = tree.order();
    if (z < 0 || z >= n || z_prime < 0 || z_prime >= n)
        throw PreconditionError("tree_surgery: vertex out of range");
    if (z == z_prime)
        throw PreconditionError("tree_surgery: z == z'");
    if (tree.degree(z) < 3 || tree.degree(z_prime) < 3)
        throw PreconditionError("tree_surgery: z and z' must have degree >= 3");

    const auto from_z = bfs_distances(tree, z);
    Vertex toward_z = -1;
    tree.neighbors(z_prime).for_each([&](Vertex v) {
        if (from_z[v] == from_z[z_prime] - 1)
            toward_z = v;
    });

    // depth of the branch rooted at each other neighbor q of z'
    GraphBuilder cut(n);
    for (auto [u, v] : tree.edges())
        if (u != z_prime && v != z_prime)
            cut.add_edge(u, v);
    const Graph forest = cut.build();
    Vertex keep = -1;
    int keep_depth = -1;
    std::vector<Vertex> others;
    tree.neighbors(z_prime).for_each([&](Vertex q) {
        if (q == toward_z)
            return;
        others.push_back(q);
        const auto d = bfs_distances(forest, q);
        const int depth = *std::max_element(d.begin(), d.end());
        if (depth > keep_depth) {
            keep_depth = depth;
            keep = q;
        }
    });

    SurgeryResult out;
    out.z = z;
    out.z_prime = z_prime;
    GraphBuilder b(n);
    for (auto [u, v] : tree.edges())
        b.add_edge(u, v);
    for (Vertex q : others) {
        if (q == keep)
            continue;
        b.remove_edge(z_prime, q);
        b.add_edge(z, q);
        out.moved.push_back(q);
    }
    out.tree = b.build();
    return out;
}

Graph reverse_surgery(const SurgeryResult& s)
{
    GraphBuilder b(s.tree.order());
    for (auto [u, v] : s.tree.edges())
        b.add_edge(u, v);
    for (Vertex q : s.moved) {
        b.remove_edge(s.z, q);
        b.add_edge(s.z_prime, q);
    }
    return b.build();
}

Graph random_tree_with_diameter(int n, int d, std::uint64_t seed)
{
    if (n < 1 || d < 0 || d > n - 1)
        throw PreconditionError("random_tree_with_diameter: need 0 <= d <= n-1");
    if ((d == 0 && n > 1) || (d == 1 && n > 2))
        throw PreconditionError("random_tree_with_diameter: no tree with this order and diameter");
    std::mt19937_64 rng(seed);
    GraphBuilder b(n);
    // distances to the two ends of the spine; in a tree these determine
    // every eccentricity
    std::vector<int> to_a(static_cast<std::size_t>(n)), to_b(static_cast<std::size_t>(n));
    for (Vertex v = 0; v <= d; ++v) {
        if (v > 0)
            b.add_edge(v - 1, v);
        to_a[v] = v;
        to_b[v] = d - v;
    }
    std::vector<Vertex> eligible;
    for (Vertex w = d + 1; w < n; ++w) {
        eligible.clear();
        for (Vertex v = 0; v < w; ++v)
            if (std::max(to_a[v], to_b[v]) <= d - 1)
                eligible.push_back(v);
        std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
        const Vertex parent = eligible[pick(rng)];
        b.add_edge(parent, w);
        to_a[w] = to_a[parent] + 1;
        to_b[w] = to_b[parent] + 1;
    }
    return b.build();
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return b.build();
}

Graph make_octahedron()
{
    return make_complete_multipartite({2, 2, 2});
}

Graph make_icosahedron()
{
    // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
    GraphBuilder b(12);
    for (int i = 0; i < 5; ++i) {
        const Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
        const Vertex low = 6 + i, low_next = 6 + (i + 1) % 5;
        b.add_edge(0, up);
        b.add_edge(up, up_next);
        b.add_edge(low, low_next);
        b.add_edge(up, low);
        b.add_edge(up, low_next);
        b.add_edge(11, low);
    }
    return b.build();
}

Graph make_fan(int n)
{
    if (n < 2)
        throw PreconditionError("make_fan: n must be >= 2");
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v) {
        b.add_edge(0, v);
        if (v + 1 < n)
            b.add_edge(v, v + 1);
    }
    return b.build();
}

Graph make_apollonian(int depth)
{
    if (depth < 0)
        throw PreconditionError("make_apollonian: depth must be >= 0");
    GraphBuilder b(3);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(0, 2);
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
    for (int level = 0; level < depth; ++level) {
        std::vector<std::array<Vertex, 3>> next;
        for (auto [a, c, e] : faces) {
            const Vertex w = b.add_vertex();
            b.add_edge(a, w);
            b.add_edge(c, w);
            b.add_edge(e, w);
            next.push_back({a, c, w});
            next.push_back({c, e, w});
            next.push_back({a, e, w});
        }
        faces = std::move(next);
    }
    return b.build();
}

Graph make_remark1()
{
    return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
}

Graph make_named(std::string_view id)
{
    auto param = [&](std::string_view prefix) {
        auto rest = id.substr(prefix.size());
        int v = 0;
        auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
        if (ec != std::errc{} || p != rest.data() + rest.size())
            throw PreconditionError("bad parameter in named graph '" + std::string(id) + "'");
        return v;
    };
    if (id == "octahedron")
        return make_octahedron();
    if (id == "icosahedron")
        return make_icosahedron();
    if (id == "remark1")
        return make_remark1();
    if (id.starts_with("fan:"))
        return make_fan(param("fan:"));
    if (id.starts_with("apollonian:"))
        return make_apollonian(param("apollonian:"));
    throw PreconditionError("unknown named graph '" + std::string(id) + "'");
}

std::uint64_t labeled_graph_count(int n)
{
    const int bits = n * (n - 1) / 2;
    if (bits >= 64)
        throw CapExceeded("labeled graph count overflows 64 bits");
    return std::uint64_t{1} << bits;
}

void check_enumeration_cap(int n, int cap)
{
    if (n < 0)
        throw PreconditionError("enumeration order must be >= 0");
    if (n > cap)
        throw CapExceeded("labeled enumeration of order " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
}

Graph graph_from_mask(int n, std::uint64_t mask)
{
    const int bits = n * (n - 1) / 2;
    GraphBuilder b(n);
    int k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if ((mask >> (bits - 1 - k)) & 1)
                b.add_edge(i, j);
    return b.build();
}

}  // namespace regindep
