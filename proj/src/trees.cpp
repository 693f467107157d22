#include "regindep/trees.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "regindep/errors.hpp"
#include "regindep/graph_io.hpp"
#include "regindep/solver.hpp"

namespace regindep {

TreeDiameterProfile tree_profile(const Graph& tree)
{
    if (tree.order() < 2 || !is_tree(tree))
        throw PreconditionError("tree_profile: input is not a tree on >= 2 vertices");
    TreeDiameterProfile p;
    p.n = tree.order();
    p.diameter = *diameter(tree);
    p.t = p.n - p.diameter;
    int excess = 0;
    for (int d : tree.degrees()) {
        if (d == 1)
            ++p.n1;
        else if (d == 2)
            ++p.n2;
        else {
            ++p.big;
            excess += d - 2;
        }
    }
    if (p.n1 != excess + 2)
        throw std::logic_error("leaf-count identity violated");
    if (p.t >= 2 && p.t <= p.n - 3)
        p.f = f_of(p.n, p.t);
    return p;
}

int f_of(int n, int t)
{
    if (t < 2 || t > n - 3)
        throw PreconditionError("f(n,t) requires 2 <= t <= n-3");
    const int den = (n - t) % 2 == 0 ? n - t : n - t - 1;
    const int num = 2 * (t - 1);
    return (num + den - 1) / den + 2;
}

int fast_alpha_tree(const Graph& tree, int k)
{
    if (k < 2)
        throw PreconditionError("fast_alpha_tree: k must be >= 2");
    const auto p = tree_profile(tree);
    if (p.t < 2 || p.t > p.n - 3)
        throw PreconditionError("fast_alpha_tree: requires 2 <= t <= n-3");
    return std::max(p.n1, p.n2);
}

std::string regime_name(Regime r)
{
    switch (r) {
    case Regime::I:
        return "i";
    case Regime::II:
        return "ii";
    case Regime::III:
        return "iii";
    case Regime::IV:
        return "iv";
    }
    return "?";
}

std::optional<std::pair<int, int>> regime_t_range(Regime r, int n)
{
    std::pair<int, int> range;
    switch (r) {
    case Regime::I:
        range = {2, (n - 1) / 3};
        break;
    case Regime::II:
        range = {(n + 2) / 3, n - 5};
        break;
    case Regime::III:
        range = {n - 4, n - 4};
        break;
    case Regime::IV:
        range = {n - 3, n - 3};
        break;
    }
    if (n < 8 || range.first > range.second)
        return std::nullopt;
    return range;
}

std::vector<RegimeBound> thm31_bounds(int n, int t)
{
    if (n < 8)
        throw PreconditionError("Theorem 3.1 bounds need n >= 8");
    std::vector<RegimeBound> out;
    // (i): 2 <= t <= (n-1)/3
    if (t >= 2 && 3 * t <= n - 1)
        out.push_back({Regime::I, {n - 2 * t, 1}, n - 4});
    // (ii): n/3 <= t <= n-5
    if (3 * t >= n && t <= n - 5)
        out.push_back({Regime::II, {n + 2, 3}, std::max(n - f_of(n, t) - 1, t + 1)});
    if (t == n - 4)
        out.push_back({Regime::III, {(n - 1 + 1) / 2, 1}, t + 1});
    if (t == n - 3)
        out.push_back({Regime::IV, {t + 1, 1}, t + 1});
    if (out.empty())
        throw PreconditionError("t lies in no regime for n=" + std::to_string(n));
    return out;
}

std::vector<TreeBoundInstance> check_tree_instance(const Graph& tree, std::uint64_t seed)
{
    TreeBoundInstance base;
    base.seed = seed;
    base.graph6 = encode_graph6(tree);
    base.n = tree.order();
    try {
        base.profile = tree_profile(tree);
        base.leaf_identity_ok = true;
    } catch (const std::logic_error&) {
        base.leaf_identity_ok = false;
        throw;
    }
    base.t = base.profile.t;
    base.alpha = alpha_kreg(tree, 2).value;
    base.fast_alpha = fast_alpha_tree(tree, 2);
    base.fast_ok = base.alpha == base.fast_alpha;
    base.leaf_bound_ok = base.profile.f && base.profile.n1 >= *base.profile.f;

    std::vector<TreeBoundInstance> out;
    for (const auto& b : thm31_bounds(base.n, base.t)) {
        TreeBoundInstance inst = base;
        inst.regime = b.regime;
        inst.bound = b;
        inst.bound_ok = b.lower.at_most(inst.alpha) && inst.alpha <= b.upper;
        out.push_back(inst);
    }
    return out;
}

FigureCheck check_figure_tree(const FigureTreeId& id)
{
    FigureCheck c;
    c.id = id;
    c.name = figure_name(id);
    const Graph g = make_figure_tree(id);
    c.graph6 = encode_graph6(g);
    c.expected = figure_expectation(id).alpha;
    c.alpha = alpha_kreg(g, 2).value;
    c.pass = c.alpha == c.expected;
    return c;
}

std::vector<FigureTreeId> default_figure_trees()
{
    return {
        {FigureTree::Fig1a, 16, 5}, {FigureTree::Fig1b, 16, 5}, {FigureTree::Fig2a, 0, 4},
        {FigureTree::Fig2b, 0, 0},  {FigureTree::Fig2c, 0, 0},  {FigureTree::Fig2d, 0, 0},
        {FigureTree::Fig3a, 0, 0},  {FigureTree::Fig3b, 0, 0},
    };
}

namespace {

void tally(Thm31Report& report)
{
    report.violations = 0;
    for (const auto& i : report.instances)
        report.violations += i.pass() ? 0 : 1;
    for (const auto& f : report.figures)
        report.violations += f.pass ? 0 : 1;
}

}  // namespace

Thm31Report verify_thm31(int samples, std::uint64_t seed)
{
    Thm31Report report;
    for (Regime r : {Regime::I, Regime::II, Regime::III, Regime::IV}) {
        for (int s = 0; s < samples; ++s) {
            const std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(s);
            const int n = 8 + static_cast<int>(sample_seed % 11);
            const auto range = regime_t_range(r, n);
            std::mt19937_64 rng(sample_seed * 4 + static_cast<std::uint64_t>(r));
            std::uniform_int_distribution<int> pick(range->first, range->second);
            const int t = pick(rng);
            const Graph tree = random_tree_with_diameter(n, n - t, sample_seed);
            for (auto& inst : check_tree_instance(tree, sample_seed))
                if (inst.regime == r)
                    report.instances.push_back(std::move(inst));
        }
    }
    for (const auto& id : default_figure_trees())
        report.figures.push_back(check_figure_tree(id));
    tally(report);
    return report;
}

Thm31Report verify_thm31_at(int n, int t, int samples, std::uint64_t seed)
{
    thm31_bounds(n, t);
    Thm31Report report;
    for (int s = 0; s < samples; ++s) {
        const std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(s);
        const Graph tree = random_tree_with_diameter(n, n - t, sample_seed);
        for (auto& inst : check_tree_instance(tree, sample_seed))
            report.instances.push_back(std::move(inst));
    }
    tally(report);
    return report;
}

}  // namespace regindep
