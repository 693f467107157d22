#pragma once

#include "regindep/graph.hpp"

namespace regindep {

/// Size limits for the exact shape predicates. Larger inputs throw
/// CapExceeded.
inline constexpr int kPlanarityCap = 20;
inline constexpr int kMatchingCap = 20;
inline constexpr int kTwoFactorCap = 14;

bool has_perfect_matching(const Graph& g);
int maximum_matching_size(const Graph& g);

/// Spanning 2-regular subgraph, by exhaustive search.
bool has_two_factor(const Graph& g);

bool is_planar(const Graph& g);
/// Planar after adding a vertex adjacent to every vertex.
bool is_outerplanar(const Graph& g);
/// Outerplanar with m = 2n - 3 (n >= 2).
bool is_maximal_outerplanar(const Graph& g);
/// Planar with m = 3n - 6 (n >= 3). Also called a triangulation.
bool is_maximal_planar(const Graph& g);

}  // namespace regindep
