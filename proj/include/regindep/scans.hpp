#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regindep/graph.hpp"

namespace regindep {

/// Both sides of one characterization for a single (G, k).
struct IffRecord {
    std::string tag;
    bool lhs = false;
    bool rhs = false;

    bool agree() const { return lhs == rhs; }
};

struct ExtremalRecord {
    int k = 0;
    int alpha = 0;
    /// alpha_kreg = 1  <=>  k = 0 and every degree class induces a clique.
    IffRecord thm41;
    /// alpha_kreg = n  <=>  G is h-regular and k >= h.
    IffRecord thm42;
};

/// Requires n >= 1.
ExtremalRecord verify_extremal(const Graph& g, int k);
/// Same, reusing a known alpha_kreg(g, k).
ExtremalRecord verify_extremal(const Graph& g, int k, int alpha);

/// True iff every nonempty degree class of g induces a clique.
bool degree_classes_are_cliques(const Graph& g);
/// True iff every nonempty degree class of g induces a connected subgraph.
bool degree_classes_connected(const Graph& g);

struct NGRecord {
    std::uint64_t mask = 0;
    int k = 0;
    int a_g = 0;
    int a_gbar = 0;

    int sum() const { return a_g + a_gbar; }
    int product() const { return a_g * a_gbar; }
};

struct Prop61Record {
    int k = 0;
    int sum = 0;
    int product = 0;
    bool cond_k0 = false;
    bool cond_small_classes = false;
    bool cond_connected = false;
    /// sum = 3 or product = 2.
    bool lhs = false;
    bool rhs = false;

    bool agree() const { return lhs == rhs; }
};

/// Requires n >= 2.
Prop61Record verify_prop61(const Graph& g, int k);
Prop61Record verify_prop61(const Graph& g, int k, int a_g, int a_gbar);

struct Prop62Record {
    int k = 0;
    bool sum_is_2n = false;
    bool product_is_n2 = false;
    bool regular_and_k_large = false;

    bool agree() const { return sum_is_2n == product_is_n2 && product_is_n2 == regular_and_k_large; }
};

/// Requires n >= 2.
Prop62Record verify_prop62(const Graph& g, int k);
Prop62Record verify_prop62(const Graph& g, int k, int a_g, int a_gbar);

struct ScanViolation {
    std::string check;
    std::uint64_t mask = 0;
    int k = 0;
    std::string detail;
};

struct ScanOptions {
    int threads = 1;
    bool keep_records = true;
    /// Also run Theorems 4.1/4.2 and Propositions 6.1/6.2 on every graph.
    bool characterizations = true;
    int cap = 7;
};

struct NGScanReport {
    int n = 0;
    std::vector<int> ks;
    /// Ordered by (mask, position of k in ks); increasing mask is
    /// increasing graph6 string.
    std::vector<NGRecord> records;
    std::vector<ScanViolation> violations;
    /// Number of instances evaluated per check.
    std::map<std::string, std::uint64_t> checked;
    std::uint64_t graphs = 0;
};

/// Every labeled graph on n vertices (2 <= n <= cap) and every k in ks:
/// Theorem 6.1 bounds and Observations 1 and 2, plus the characterizations
/// when requested. Work is sharded by mask range; the merged report does
/// not depend on the thread count.
NGScanReport ng_scan(int n, const std::vector<int>& ks, const ScanOptions& options = {});

/// REGINDEP_THREADS if set and positive, else the hardware concurrency.
int default_thread_count();

}  // namespace regindep
