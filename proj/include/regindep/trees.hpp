#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regindep/families.hpp"
#include "regindep/graph.hpp"

namespace regindep {

/// Degree bookkeeping of a tree of order n and diameter n - t.
struct TreeDiameterProfile {
    int n = 0;
    int t = 0;
    int diameter = 0;
    int n1 = 0;
    int n2 = 0;
    /// |D_{>=3}|.
    int big = 0;
    /// f(n, t) when 2 <= t <= n-3.
    std::optional<int> f;
};

/// Requires a tree on at least 2 vertices. Verifies the leaf-count identity
/// n1 = 2 + sum over D_{>=3} of (deg - 2) and throws std::logic_error if it
/// fails.
TreeDiameterProfile tree_profile(const Graph& tree);

/// Leaf-count lower bound for trees of order n and diameter n - t;
/// requires 2 <= t <= n-3.
int f_of(int n, int t);

/// max(n1, n2), valid for k >= 2 and 2 <= t <= n-3. Throws
/// PreconditionError outside that range.
int fast_alpha_tree(const Graph& tree, int k);

/// Nonnegative rational p/q, q > 0.
struct Rational {
    long num = 0;
    long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// x >= num/den for an integer x.
    bool at_most(long x) const { return x * den >= num; }
};

enum class Regime { I, II, III, IV };

std::string regime_name(Regime r);

struct RegimeBound {
    Regime regime = Regime::I;
    Rational lower;
    int upper = 0;
};

/// Applicable bound pairs for trees of order n >= 8 and diameter n - t.
/// Regimes (i) and (ii) cannot both apply for integer t; the vector is
/// nevertheless returned in full. Throws PreconditionError if n < 8 or t
/// lies in no regime.
std::vector<RegimeBound> thm31_bounds(int n, int t);

/// Range of t for a regime at order n (inclusive), empty if infeasible.
std::optional<std::pair<int, int>> regime_t_range(Regime r, int n);

struct TreeBoundInstance {
    Regime regime = Regime::I;
    int n = 0;
    int t = 0;
    std::uint64_t seed = 0;
    std::string graph6;
    int alpha = 0;
    int fast_alpha = 0;
    RegimeBound bound;
    TreeDiameterProfile profile;
    bool bound_ok = false;
    bool fast_ok = false;
    bool leaf_identity_ok = false;
    bool leaf_bound_ok = false;

    bool pass() const { return bound_ok && fast_ok && leaf_identity_ok && leaf_bound_ok; }
};

/// Checks one tree at k = 2 against every applicable regime bound.
std::vector<TreeBoundInstance> check_tree_instance(const Graph& tree, std::uint64_t seed);

struct FigureCheck {
    FigureTreeId id;
    std::string name;
    std::string graph6;
    int expected = 0;
    int alpha = 0;
    bool pass = false;
};

FigureCheck check_figure_tree(const FigureTreeId& id);

/// The eight example trees at the parameters used by the verifier.
std::vector<FigureTreeId> default_figure_trees();

struct Thm31Report {
    std::vector<TreeBoundInstance> instances;
    std::vector<FigureCheck> figures;
    int violations = 0;
};

/// For every regime, sample `samples` trees with seeds seed..seed+samples-1.
/// The order is 8 + (s mod 11) and t is drawn from the regime's range.
/// Also checks every default figure tree.
Thm31Report verify_thm31(int samples, std::uint64_t seed);

/// `samples` random trees of order n and diameter n - t.
Thm31Report verify_thm31_at(int n, int t, int samples, std::uint64_t seed);

}  // namespace regindep
