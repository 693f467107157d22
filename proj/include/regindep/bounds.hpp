#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regindep/graph.hpp"
#include "regindep/solver.hpp"

namespace regindep {

enum class Verdict { Holds, Fails, Inconclusive, NotApplicable };
enum class ChiMode { Exact, LowerBoundSurrogate, NotUsed };

std::string verdict_name(Verdict v);
std::string chi_mode_name(ChiMode m);

/// Quantities behind the line-graph coefficient of Lemma 5.2, kept as
/// integers: with d = 2m/n and c = 2d - 2*delta + 1,
///   c*d = A/n^2 with A = 2m(4m - 2*delta*n + n),
///   c*d - delta = B/n^2 with B = A - delta*n^2,
/// so coefficient^2 = delta^2 n^4 / (A*B).
struct RepBoundParams {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    double avg_degree = 0;
    double c = 0;
    long long a_num = 0;
    long long b_num = 0;
    /// Only when defined (delta >= 1 and B > 0).
    std::optional<double> coefficient;
};

/// Throws PreconditionError when the graph has no vertices.
RepBoundParams rep_bound_params(const Graph& g);

/// One checked inequality instance. Every comparison is exact: the bound
/// "lhs >= F/chi" is rearranged into an integer inequality in lhs*chi.
struct BoundCertificate {
    std::string theorem;
    std::string graph_id;
    /// Absent for repetition-number lemmas that do not involve chi_k.
    std::optional<int> k;
    int n = 0;
    int m = 0;
    int min_degree = 0;
    /// "alpha_kreg(L)" or "rep(L)".
    std::string lhs_kind;
    int lhs = 0;
    /// Bound value at the chi used, for display only.
    double rhs = 0;
    std::string rhs_expr;
    /// Integer inequality that decided the verdict.
    std::string exact_check;
    ChiMode chi_mode = ChiMode::NotUsed;
    int chi = 0;
    int chi_lower = 0;
    int chi_upper = 0;
    bool escalated = false;
    Verdict verdict = Verdict::NotApplicable;
    /// Lemma 5.5 only: verdict under the printed reading with chi_k.
    std::optional<Verdict> literal_verdict;
    std::string note;
};

/// Caches alpha_kreg, rep and chi_k of L(G) for one (G, k).
class LineGraphInstance {
public:
    LineGraphInstance(const Graph& g, int k, std::uint64_t chi_budget = kDefaultChiBudget);

    const Graph& graph() const { return g_; }
    const Graph& line() const { return line_; }
    const std::string& graph_id() const { return id_; }
    int k() const { return k_; }
    std::uint64_t chi_budget() const { return budget_; }

    int alpha();
    int rep() const { return rep_; }
    const ChiResult& chi();
    /// chi_k with 100 times the budget; computed at most once.
    const ChiResult& chi_escalated();

private:
    Graph g_;
    Graph line_;
    std::string id_;
    int k_;
    std::uint64_t budget_;
    int rep_;
    std::optional<int> alpha_;
    std::optional<ChiResult> chi_;
    std::optional<ChiResult> chi_big_;
};

/// Theorem 5.1: alpha_kreg(L) >= m^(1/3) / (4 chi_k(L)).
BoundCertificate verify_thm51(LineGraphInstance& inst);
/// Theorem 5.2; NotApplicable when the coefficient is undefined. Throws
/// PreconditionError when delta < 1.
BoundCertificate verify_thm52(LineGraphInstance& inst);
/// Corollary 5.1 for trees and maximal planar graphs. Throws
/// PreconditionError for other shapes.
BoundCertificate verify_cor51(LineGraphInstance& inst);

enum class LgShape {
    TreePerfectMatching,
    MaximalOuterplanar,
    Triangulation2Factor,
    Triangulation2FactorDelta4,
    Triangulation2FactorDelta5,
    TriangulationDelta4,
    TriangulationDelta5,
};

std::string shape_name(LgShape s);
/// Theorem tag of the branch, e.g. "thm5.3(2)".
std::string shape_theorem(LgShape s);
/// Denominator constant of the branch (6, 14, 33, 27, 15, 68, 51).
int shape_constant(LgShape s);
bool shape_holds(const Graph& g, LgShape s);
std::vector<LgShape> all_shapes();

/// Theorems 5.3 and 5.4: alpha_kreg(L) >= m / (c chi_k(L)). Throws
/// PreconditionError when g does not have the shape.
BoundCertificate verify_thm53_54(LineGraphInstance& inst, LgShape shape);

enum class RepLemma {
    L51,
    L52,
    L53Tree,
    L53MaximalPlanar,
    L54TreePerfectMatching,
    L54MaximalOuterplanar,
    L54Triangulation2Factor,
    L54Triangulation2FactorDelta4,
    L54Triangulation2FactorDelta5,
    L55Delta4,
    L55Delta5,
};

std::string rep_lemma_tag(RepLemma l);
bool rep_lemma_applies(const Graph& g, RepLemma l);
std::vector<RepLemma> all_rep_lemmas();

/// Checks rep(L(G)) against the cited bound. Lemma 5.5 is decided by the
/// chi-free reading rep(L) >= m/c; its printed reading with chi_k(L) is
/// stored in literal_verdict. Throws PreconditionError when the lemma's
/// shape does not apply.
BoundCertificate verify_rep_lemma(LineGraphInstance& inst, RepLemma lemma);

/// Every theorem and lemma certificate whose shape applies to g, in a
/// fixed order. Shapes whose predicate would exceed its size cap are
/// skipped.
std::vector<BoundCertificate> all_applicable_certificates(LineGraphInstance& inst);

}  // namespace regindep
