#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "regindep/graph.hpp"

namespace regindep {

struct KIndependentSet {
    int value = 0;
    std::vector<Vertex> witness;
};

/// Maximum k-independent set (induced maximum degree <= k).
///
/// Branch and bound over vertices ordered by degree descending (index
/// ascending on ties), include branch first. Candidates that can no longer
/// join are dropped after every inclusion; nodes are pruned against a
/// clique-cover bound (a clique contributes at most k+1 vertices).
KIndependentSet alpha_k(const Graph& g, int k);

/// Same search restricted to `domain`; degrees for ordering are taken
/// inside g[domain]. Witness uses host labels.
KIndependentSet alpha_k_within(const Graph& g, const VertexSet& domain, int k);

/// alpha_k on G[D_j(G)]; zero with an empty witness when D_j is empty.
KIndependentSet alpha_kj(const Graph& g, int k, int j);

struct RegKIndepResult {
    int value = 0;
    /// alpha_{k,j} for every nonempty degree class j.
    std::map<int, int> per_class;
    /// Smallest j attaining the maximum; 0 for the empty graph.
    int best_degree = 0;
    std::vector<Vertex> witness;
};

/// Regular k-independence number: max over present degree classes of
/// alpha_{k,j}. The empty graph yields value 0 and an empty class map.
RegKIndepResult alpha_kreg(const Graph& g, int k);

int repetition_number(const Graph& g);

/// True iff `s` lies inside a single degree class and g[s] has maximum
/// degree <= k. Uses only pairwise adjacency queries.
bool is_regular_k_independent(const Graph& g, const std::vector<Vertex>& s, int k);

bool is_k_independent(const Graph& g, const std::vector<Vertex>& s, int k);

struct DefectiveColoring {
    int k = 0;
    int color_count = 0;
    /// assignment[v] in [0, color_count).
    std::vector<int> assignment;
};

enum class ChiStatus { Exact, Inconclusive };

/// Result of the k-defective chromatic number search. For Exact results
/// lower == upper == coloring.color_count; otherwise the search ran out of
/// nodes while testing `lower` colors and `coloring` is the best found.
struct ChiResult {
    ChiStatus status = ChiStatus::Exact;
    int lower = 0;
    int upper = 0;
    DefectiveColoring coloring;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultChiBudget = 10'000'000;

/// Exact chi_k by iterative deepening on the color count from
/// ceil(n / alpha_k) up to a greedy upper bound.
ChiResult chi_k(const Graph& g, int k, std::uint64_t budget = kDefaultChiBudget);

bool is_defective_coloring(const Graph& g, const std::vector<int>& assignment, int k);

}  // namespace regindep
