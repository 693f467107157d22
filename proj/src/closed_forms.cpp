#include "regindep/closed_forms.hpp"

#include <algorithm>
#include <map>

namespace regindep {
namespace {

void require_k(int k)
{
    if (k < 0)
        throw PreconditionError("k must be >= 0");
}

int ceil_div(int a, int b)
{
    return (a + b - 1) / b;
}

}  // namespace

FormulaResult cf_complete(int n, int k)
{
    require_k(k);
    if (n < 1)
        throw PreconditionError("cf_complete: n must be >= 1");
    if (k <= n - 1)
        return {k + 1, "prop2.1:k=i<=n-1"};
    return {n, "prop2.1:k>=n"};
}

int multipartite_exact(const std::vector<int>& parts, int k)
{
    require_k(k);
    std::map<int, int> groups;
    for (int p : parts)
        ++groups[p];
    int best = 0;
    for (auto [a, count] : groups)
        for (int q = 1; q <= count; ++q)
            for (int s = 1; s <= a; ++s) {
                const int top = std::min(s + (q - 1) * a, k + s);
                if (top >= q * s)
                    best = std::max(best, top);
            }
    return best;
}

FormulaResult cf_multipartite(const std::vector<int>& parts, int k)
{
    require_k(k);
    if (parts.size() < 2)
        throw PreconditionError("cf_multipartite: need at least 2 parts");
    for (int p : parts)
        if (p < 1)
            throw PreconditionError("cf_multipartite: empty part");

    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    std::map<int, int> groups;
    for (int p : sorted)
        ++groups[p];
    int repeated_values = 0;
    int repeated = 0;
    for (auto [size, count] : groups)
        if (count > 1) {
            ++repeated_values;
            repeated = size;
        }

    const int parts_n = static_cast<int>(sorted.size());
    const int largest = sorted.back();
    const int exact = multipartite_exact(parts, k);
    FormulaResult out;

    if (groups.size() == 1) {
        const int a = sorted.front();
        if (k >= parts_n * a) {
            out = {parts_n * a, "prop2.2(1):k>=na"};
        } else {
            const int i = k / a + 1;
            out = {i * a, "prop2.2(1):(i-1)a<=k<ia"};
        }
        if (exact != out.value)
            out.discrepancy = Discrepancy{"prop2.2-case1", out.value, exact,
                                          "a maximum set may use parts partially"};
        return out;
    }
    if (repeated_values == 0)
        return {largest, "prop2.2(2):distinct"};
    if (repeated_values > 1)
        throw UnsupportedShape("cf_multipartite: several distinct repeated part sizes");

    const int ri = repeated;
    const int span = groups[ri] - 1;  // j - i
    if (k >= span * ri) {
        out = {std::max(span * ri, largest), "prop2.2(3):k>=(j-i)r_i"};
        out.discrepancy = Discrepancy{"prop2.2-case3-tail", out.value, exact,
                                      "the run r_i..r_j has j-i+1 equal parts, not j-i"};
        return out;
    }
    const int m = k / ri + 1;
    out = {std::max(m * ri, largest), "prop2.2(3):(m-1)r_i<=k<mr_i"};
    if (exact != out.value)
        out.discrepancy = Discrepancy{"prop2.2-case3-m", out.value, exact,
                                      "a maximum set may use parts partially"};
    return out;
}

PathDecomposition decompose_path_order(int n)
{
    if (n < 5)
        throw PreconditionError("path decomposition needs n >= 5");
    return {(n - 2) / 3 + 2, (n - 2) % 3};
}

FormulaResult cf_path(int n, int k)
{
    require_k(k);
    if (n < 2)
        throw PreconditionError("cf_path: n must be >= 2");
    if (n == 2)
        return k == 0 ? FormulaResult{1, "prop2.5(2):P2,k=0"} : FormulaResult{2, "prop2.5(2):P2,k>=1"};
    if (n <= 4)
        return {2, "prop2.5(2):P3,P4"};
    const auto [m, i] = decompose_path_order(n);
    if (k == 0)
        return {ceil_div(n - 2, 2), "prop2.5(1):k=0"};
    if (k == 1)
        return {n - m, "prop2.5(1):k=1"};
    return {n - 2, "prop2.5(1):k>=2"};
}

FormulaResult cf_cycle(int n, int k)
{
    require_k(k);
    if (n < 3)
        throw PreconditionError("cf_cycle: n must be >= 3");
    if (k == 0)
        return {n / 2, "prop2.6:k=0"};
    if (k == 1) {
        const int a = n / 3;
        if (n % 3 == 2)
            return {2 * a + 1, "prop2.6:k=1,n=3a+2"};
        return {2 * a, "prop2.6:k=1,n=3a|3a+1"};
    }
    return {n, "prop2.6:k>=2"};
}

FormulaResult cf_star(int n, int k)
{
    require_k(k);
    if (n < 2)
        throw PreconditionError("cf_star: n must be >= 2");
    if (n == 2) {
        auto r = cf_path(2, k);
        r.tag = "prop2.7/n=2->" + r.tag;
        return r;
    }
    return {n - 1, "prop2.7"};
}

FormulaResult cf_spider(const SpiderSpec& spec, int k)
{
    if (k < 2)
        throw PreconditionError("cf_spider: formula holds only for k >= 2");
    if (spec.leg_count() < 3)
        throw PreconditionError("cf_spider: need at least 3 legs");
    for (int l : spec.legs)
        if (l < 2)
            throw PreconditionError("cf_spider: leg order must be >= 2");
    const int n = spec.order();
    const int r = spec.leg_count();
    // r > (n-1)/2  <=>  2r > n-1
    if (2 * r > n - 1)
        return {r, "example1(i):r>(n-1)/2"};
    return {n - r - 1, "example1(i):r<=(n-1)/2"};
}

}  // namespace regindep
