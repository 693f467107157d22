#include "regindep/oracle.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regindep/errors.hpp"

namespace regindep {

int oracle_alpha_kreg(const Graph& g, int k, int class_cap)
{
    const int n = g.order();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            adj[u][v] = (u != v && g.adjacent(u, v)) ? 1 : 0;

    std::map<int, std::vector<int>> classes;
    for (int u = 0; u < n; ++u) {
        int d = 0;
        for (int v = 0; v < n; ++v)
            d += adj[u][v];
        classes[d].push_back(u);
    }

    int best = 0;
    for (const auto& [degree, members] : classes) {
        const int s = static_cast<int>(members.size());
        if (s > class_cap)
            throw CapExceeded("oracle: degree class " + std::to_string(degree) + " has " +
                              std::to_string(s) + " vertices, cap is " +
                              std::to_string(class_cap));
        std::vector<std::uint32_t> local(static_cast<std::size_t>(s), 0);
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                if (adj[members[a]][members[b]])
                    local[a] |= std::uint32_t{1} << b;
        const std::uint32_t limit = s == 32 ? 0xffffffffu : (std::uint32_t{1} << s);
        for (std::uint32_t mask = 1; mask != 0 && mask < limit; ++mask) {
            const int size = std::popcount(mask);
            if (size <= best)
                continue;
            bool ok = true;
            for (int a = 0; a < s && ok; ++a)
                if ((mask >> a) & 1u)
                    ok = std::popcount(local[a] & mask) <= k;
            if (ok)
                best = size;
        }
    }
    return best;
}

}  // namespace regindep
