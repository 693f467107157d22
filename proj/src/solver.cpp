#include "regindep/solver.hpp"

#include <algorithm>
#include <numeric>

#include "regindep/errors.hpp"

namespace regindep {
namespace {

class KIndepSearch {
public:
    KIndepSearch(const Graph& g, int k) : g_(g), k_(k), count_(static_cast<std::size_t>(g.order()), 0) {}

    KIndependentSet run()
    {
        const int n = g_.order();
        VertexSet chosen(n), saturated(n);
        search(chosen, saturated, g_.all_vertices(), 0);
        KIndependentSet out;
        out.value = best_size_;
        out.witness = best_.to_vector();
        return out;
    }

private:
    // Greedy clique partition of the candidates, each clique capped at k+1.
    int bound(const VertexSet& candidates) const
    {
        std::vector<VertexSet> cliques;
        std::vector<int> sizes;
        candidates.for_each([&](Vertex v) {
            for (std::size_t i = 0; i < cliques.size(); ++i) {
                if ((cliques[i] - g_.neighbors(v)).empty()) {
                    cliques[i].insert(v);
                    ++sizes[i];
                    return;
                }
            }
            cliques.emplace_back(g_.order());
            cliques.back().insert(v);
            sizes.push_back(1);
        });
        int total = 0;
        for (int s : sizes)
            total += std::min(s, k_ + 1);
        return total;
    }

    void search(VertexSet& chosen, VertexSet& saturated, VertexSet candidates, int size)
    {
        if (size > best_size_) {
            best_size_ = size;
            best_ = chosen;
        }
        if (candidates.empty())
            return;
        if (size + candidates.size() <= best_size_)
            return;
        if (size + bound(candidates) <= best_size_)
            return;

        const Vertex v = candidates.first();
        candidates.erase(v);

        // include v
        {
            const VertexSet touched = g_.neighbors(v) & chosen;
            chosen.insert(v);
            count_[v] = touched.size();
            touched.for_each([&](Vertex u) { ++count_[u]; });
            VertexSet sat = saturated;
            if (count_[v] >= k_)
                sat.insert(v);
            touched.for_each([&](Vertex u) {
                if (count_[u] >= k_)
                    sat.insert(u);
            });
            VertexSet next = candidates;
            sat.for_each([&](Vertex u) { next -= g_.neighbors(u); });
            VertexSet filtered = next;
            next.for_each([&](Vertex w) {
                if (g_.neighbors(w).intersection_size(chosen) > k_)
                    filtered.erase(w);
            });
            search(chosen, sat, std::move(filtered), size + 1);
            touched.for_each([&](Vertex u) { --count_[u]; });
            count_[v] = 0;
            chosen.erase(v);
        }
        // exclude v
        search(chosen, saturated, std::move(candidates), size);
    }

    const Graph& g_;
    int k_;
    std::vector<int> count_;
    VertexSet best_;
    int best_size_ = -1;
};

// Vertices of `domain` sorted by degree inside g[domain] descending, index
// ascending on ties.
std::vector<Vertex> search_order(const Graph& g, const VertexSet& domain)
{
    std::vector<Vertex> order = domain.to_vector();
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : order)
        deg[v] = g.neighbors(v).intersection_size(domain);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    return order;
}

}  // namespace

KIndependentSet alpha_k_within(const Graph& g, const VertexSet& domain, int k)
{
    if (k < 0)
        throw PreconditionError("alpha_k: k must be >= 0");
    if (domain.empty())
        return {};
    if (induced_max_degree(g, domain) <= k)
        return {domain.size(), domain.to_vector()};

    const auto order = search_order(g, domain);
    const Graph local = induced_subgraph(g, order);
    auto res = KIndepSearch(local, k).run();
    for (auto& v : res.witness)
        v = order[v];
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

KIndependentSet alpha_k(const Graph& g, int k)
{
    return alpha_k_within(g, g.all_vertices(), k);
}

KIndependentSet alpha_kj(const Graph& g, int k, int j)
{
    VertexSet cls(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == j)
            cls.insert(v);
    return alpha_k_within(g, cls, k);
}

RegKIndepResult alpha_kreg(const Graph& g, int k)
{
    if (k < 0)
        throw PreconditionError("alpha_kreg: k must be >= 0");
    RegKIndepResult out;
    const auto profile = degree_profile(g);
    for (const auto& [j, cls] : profile.classes) {
        auto r = alpha_k_within(g, cls, k);
        out.per_class[j] = r.value;
        if (r.value > out.value) {
            out.value = r.value;
            out.best_degree = j;
            out.witness = std::move(r.witness);
        }
    }
    return out;
}

int repetition_number(const Graph& g)
{
    return degree_profile(g).rep;
}

bool is_k_independent(const Graph& g, const std::vector<Vertex>& s, int k)
{
    for (Vertex v : s) {
        int inside = 0;
        for (Vertex u : s)
            if (u != v && g.adjacent(u, v))
                ++inside;
        if (inside > k)
            return false;
    }
    return true;
}

bool is_regular_k_independent(const Graph& g, const std::vector<Vertex>& s, int k)
{
    if (s.empty())
        return true;
    for (Vertex v : s)
        if (v < 0 || v >= g.order() || g.degree(v) != g.degree(s.front()))
            return false;
    std::vector<Vertex> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    return is_k_independent(g, s, k);
}

bool is_defective_coloring(const Graph& g, const std::vector<int>& assignment, int k)
{
    if (static_cast<int>(assignment.size()) != g.order())
        return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        int same = 0;
        g.neighbors(v).for_each([&](Vertex u) { same += assignment[u] == assignment[v]; });
        if (same > k)
            return false;
    }
    return true;
}

namespace {

// Orders vertices so each one has as many earlier neighbors as possible.
std::vector<Vertex> coloring_order(const Graph& g)
{
    const int n = g.order();
    std::vector<Vertex> order;
    std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (pick < 0 || placed_nbrs[v] > placed_nbrs[pick] ||
                (placed_nbrs[v] == placed_nbrs[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        placed[pick] = 1;
        order.push_back(pick);
        g.neighbors(pick).for_each([&](Vertex u) { ++placed_nbrs[u]; });
    }
    return order;
}

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k, std::uint64_t budget, std::uint64_t& nodes)
        : g_(g), k_(k), budget_(budget), nodes_(nodes), order_(coloring_order(g)) {}

    enum class Outcome { Found, Infeasible, OutOfBudget };

    Outcome run(int colors, std::vector<int>& assignment)
    {
        colors_ = colors;
        classes_.assign(static_cast<std::size_t>(colors), VertexSet(g_.order()));
        same_.assign(static_cast<std::size_t>(g_.order()), 0);
        assignment_.assign(static_cast<std::size_t>(g_.order()), -1);
        const Outcome o = extend(0, -1);
        if (o == Outcome::Found)
            assignment = assignment_;
        return o;
    }

private:
    Outcome extend(std::size_t i, int max_used)
    {
        if (i == order_.size())
            return Outcome::Found;
        if (++nodes_ > budget_)
            return Outcome::OutOfBudget;
        const Vertex v = order_[i];
        const int limit = std::min(colors_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            const VertexSet mates = g_.neighbors(v) & classes_[c];
            const int own = mates.size();
            if (own > k_)
                continue;
            bool ok = true;
            mates.for_each([&](Vertex u) { ok = ok && same_[u] < k_; });
            if (!ok)
                continue;
            classes_[c].insert(v);
            assignment_[v] = c;
            same_[v] = own;
            mates.for_each([&](Vertex u) { ++same_[u]; });
            const Outcome o = extend(i + 1, std::max(max_used, c));
            if (o != Outcome::Infeasible)
                return o;
            mates.for_each([&](Vertex u) { --same_[u]; });
            same_[v] = 0;
            assignment_[v] = -1;
            classes_[c].erase(v);
        }
        return Outcome::Infeasible;
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<Vertex> order_;
    int colors_ = 0;
    std::vector<VertexSet> classes_;
    std::vector<int> same_;
    std::vector<int> assignment_;
};

std::vector<int> greedy_defective(const Graph& g, int k)
{
    const int n = g.order();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> classes;
    std::vector<int> same(static_cast<std::size_t>(n), 0);
    for (Vertex v : order) {
        int chosen = -1;
        for (std::size_t c = 0; c < classes.size() && chosen < 0; ++c) {
            const VertexSet mates = g.neighbors(v) & classes[c];
            bool ok = mates.size() <= k;
            mates.for_each([&](Vertex u) { ok = ok && same[u] < k; });
            if (ok)
                chosen = static_cast<int>(c);
        }
        if (chosen < 0) {
            chosen = static_cast<int>(classes.size());
            classes.emplace_back(n);
        }
        const VertexSet mates = g.neighbors(v) & classes[chosen];
        same[v] = mates.size();
        mates.for_each([&](Vertex u) { ++same[u]; });
        classes[chosen].insert(v);
        color[v] = chosen;
    }
    return color;
}

}  // namespace

ChiResult chi_k(const Graph& g, int k, std::uint64_t budget)
{
    if (k < 0)
        throw PreconditionError("chi_k: k must be >= 0");
    ChiResult out;
    out.coloring.k = k;
    const int n = g.order();
    if (n == 0)
        return out;

    auto greedy = greedy_defective(g, k);
    const int ub = *std::max_element(greedy.begin(), greedy.end()) + 1;
    const int a = alpha_k(g, k).value;
    const int lb = std::max(1, (n + a - 1) / a);

    out.upper = ub;
    out.coloring.color_count = ub;
    out.coloring.assignment = greedy;

    ColoringSearch search(g, k, budget, out.nodes);
    for (int c = lb; c < ub; ++c) {
        std::vector<int> assignment;
        const auto o = search.run(c, assignment);
        if (o == ColoringSearch::Outcome::Found) {
            out.status = ChiStatus::Exact;
            out.lower = out.upper = c;
            out.coloring.color_count = c;
            out.coloring.assignment = std::move(assignment);
            return out;
        }
        if (o == ColoringSearch::Outcome::OutOfBudget) {
            out.status = ChiStatus::Inconclusive;
            out.lower = c;
            return out;
        }
    }
    out.status = ChiStatus::Exact;
    out.lower = ub;
    return out;
}

}  // namespace regindep
