#include "regindep/scans.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "regindep/errors.hpp"
#include "regindep/families.hpp"
#include "regindep/solver.hpp"

namespace regindep {

bool degree_classes_are_cliques(const Graph& g)
{
    for (const auto& [d, cls] : degree_profile(g).classes) {
        bool ok = true;
        cls.for_each([&](Vertex v) { ok = ok && (cls - g.neighbors(v)).size() == 1; });
        if (!ok)
            return false;
    }
    return true;
}

bool degree_classes_connected(const Graph& g)
{
    for (const auto& [d, cls] : degree_profile(g).classes)
        if (!is_connected(induced_subgraph(g, cls)))
            return false;
    return true;
}

ExtremalRecord verify_extremal(const Graph& g, int k)
{
    return verify_extremal(g, k, alpha_kreg(g, k).value);
}

ExtremalRecord verify_extremal(const Graph& g, int k, int alpha)
{
    if (g.order() < 1)
        throw PreconditionError("verify_extremal needs n >= 1");
    ExtremalRecord r;
    r.k = k;
    r.alpha = alpha;
    r.thm41 = {"thm4.1", alpha == 1, k == 0 && degree_classes_are_cliques(g)};
    r.thm42 = {"thm4.2", alpha == g.order(), g.is_regular() && k >= g.max_degree()};
    return r;
}

Prop61Record verify_prop61(const Graph& g, int k)
{
    const Graph gbar = complement(g);
    return verify_prop61(g, k, alpha_kreg(g, k).value, alpha_kreg(gbar, k).value);
}

Prop61Record verify_prop61(const Graph& g, int k, int a_g, int a_gbar)
{
    if (g.order() < 2)
        throw PreconditionError("Proposition 6.1 needs n >= 2");
    const Graph gbar = complement(g);
    Prop61Record r;
    r.k = k;
    r.sum = a_g + a_gbar;
    r.product = a_g * a_gbar;
    r.cond_k0 = k == 0;
    r.cond_small_classes = degree_profile(g).rep <= 2 && degree_profile(gbar).rep <= 2;
    r.cond_connected = degree_classes_connected(g) || degree_classes_connected(gbar);
    r.lhs = r.sum == 3 || r.product == 2;
    r.rhs = r.cond_k0 && r.cond_small_classes && r.cond_connected;
    return r;
}

Prop62Record verify_prop62(const Graph& g, int k)
{
    const Graph gbar = complement(g);
    return verify_prop62(g, k, alpha_kreg(g, k).value, alpha_kreg(gbar, k).value);
}

Prop62Record verify_prop62(const Graph& g, int k, int a_g, int a_gbar)
{
    const int n = g.order();
    if (n < 2)
        throw PreconditionError("Proposition 6.2 needs n >= 2");
    Prop62Record r;
    r.k = k;
    r.sum_is_2n = a_g + a_gbar == 2 * n;
    r.product_is_n2 = a_g * a_gbar == n * n;
    if (g.is_regular()) {
        const int h = g.max_degree();
        r.regular_and_k_large = k >= std::max(h, n - 1 - h);
    }
    return r;
}

int default_thread_count()
{
    if (const char* env = std::getenv("REGINDEP_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

struct Shard {
    std::vector<NGRecord> records;
    std::vector<ScanViolation> violations;
    std::map<std::string, std::uint64_t> checked;
};

void scan_graph(const Graph& g, std::uint64_t mask, const std::vector<int>& ks,
                const ScanOptions& options, Shard& out)
{
    const int n = g.order();
    const Graph gbar = complement(g);
    const auto violation = [&](const char* check, int k, std::string detail) {
        out.violations.push_back({check, mask, k, std::move(detail)});
    };
    for (int k : ks) {
        NGRecord rec{mask, k, alpha_kreg(g, k).value, alpha_kreg(gbar, k).value};
        const int sum = rec.sum(), product = rec.product();
        const std::string values = "a(G)=" + std::to_string(rec.a_g) + " a(Gbar)=" + std::to_string(rec.a_gbar);

        ++out.checked["thm6.1"];
        if (sum < 3 || sum > 2 * n || product < 2 || product > n * n)
            violation("thm6.1", k, values);

        ++out.checked["obs1"];
        const bool pair12 = std::min(rec.a_g, rec.a_gbar) == 1 && std::max(rec.a_g, rec.a_gbar) == 2;
        if ((sum == 3) != (product == 2) || (sum == 3) != pair12)
            violation("obs1", k, values);

        ++out.checked["obs2"];
        const bool both_n = rec.a_g == n && rec.a_gbar == n;
        if ((sum == 2 * n) != (product == n * n) || (sum == 2 * n) != both_n)
            violation("obs2", k, values);

        if (options.characterizations) {
            const auto ext = verify_extremal(g, k, rec.a_g);
            ++out.checked["thm4.1"];
            if (!ext.thm41.agree())
                violation("thm4.1", k, values);
            ++out.checked["thm4.2"];
            if (!ext.thm42.agree())
                violation("thm4.2", k, values);
            ++out.checked["prop6.1"];
            if (!verify_prop61(g, k, rec.a_g, rec.a_gbar).agree())
                violation("prop6.1", k, values);
            ++out.checked["prop6.2"];
            if (!verify_prop62(g, k, rec.a_g, rec.a_gbar).agree())
                violation("prop6.2", k, values);
        }
        if (options.keep_records)
            out.records.push_back(rec);
    }
}

}  // namespace

NGScanReport ng_scan(int n, const std::vector<int>& ks, const ScanOptions& options)
{
    if (n < 2)
        throw PreconditionError("ng_scan needs n >= 2");
    check_enumeration_cap(n, options.cap);
    for (int k : ks)
        if (k < 0)
            throw PreconditionError("ng_scan: k must be >= 0");

    const std::uint64_t total = labeled_graph_count(n);
    const int threads = std::max(1, options.threads);
    const std::uint64_t shard_count = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 16);
    std::vector<Shard> shards(shard_count);
    std::atomic<std::uint64_t> next{0};

    const auto worker = [&] {
        for (std::uint64_t s = next++; s < shard_count; s = next++) {
            const std::uint64_t begin = total * s / shard_count;
            const std::uint64_t end = total * (s + 1) / shard_count;
            for_each_labeled_graph_in(n, begin, end, [&](const Graph& g, std::uint64_t mask) {
                scan_graph(g, mask, ks, options, shards[s]);
            });
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    NGScanReport report;
    report.n = n;
    report.ks = ks;
    report.graphs = total;
    for (auto& s : shards) {
        report.records.insert(report.records.end(), s.records.begin(), s.records.end());
        report.violations.insert(report.violations.end(), s.violations.begin(), s.violations.end());
        for (const auto& [name, count] : s.checked)
            report.checked[name] += count;
    }
    return report;
}

}  // namespace regindep
