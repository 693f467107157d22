#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regindep/errors.hpp"
#include "regindep/families.hpp"

namespace regindep {

/// Part-size multiset with two or more distinct repeated sizes.
class UnsupportedShape : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

struct Discrepancy {
    /// Stable identifier of the suspect branch, e.g. "prop2.2-case3-tail".
    std::string family;
    int paper_value = 0;
    int corrected_value = 0;
    std::string reason;
};

struct FormulaResult {
    int value = 0;
    /// Which proposition and branch produced `value`.
    std::string tag;
    std::optional<Discrepancy> discrepancy;
};

FormulaResult cf_complete(int n, int k);
FormulaResult cf_multipartite(const std::vector<int>& parts, int k);
FormulaResult cf_path(int n, int k);
FormulaResult cf_cycle(int n, int k);
FormulaResult cf_star(int n, int k);
/// Requires k >= 2.
FormulaResult cf_spider(const SpiderSpec& spec, int k);

/// Exact regular k-independence number of a complete multipartite graph.
/// Within a group of p parts of size a, a set using q parts whose smallest
/// used part contributes s vertices has size at most min(s + (q-1)a, k + s)
/// and at least qs; the maximum over q and s is attained.
int multipartite_exact(const std::vector<int>& parts, int k);

/// Path order decomposition n = 3(m-2) + 2 + i, i in {0,1,2}, for n >= 5.
struct PathDecomposition {
    int m = 0;
    int i = 0;
};
PathDecomposition decompose_path_order(int n);

}  // namespace regindep
