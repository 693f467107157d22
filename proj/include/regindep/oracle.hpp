#pragma once

#include "regindep/graph.hpp"

namespace regindep {

inline constexpr int kDefaultOracleClassCap = 22;

/// Regular k-independence number by exhaustive subset enumeration inside
/// every degree class. Shares no search code with alpha_kreg; throws
/// CapExceeded when some class is larger than `class_cap`.
int oracle_alpha_kreg(const Graph& g, int k, int class_cap = kDefaultOracleClassCap);

}  // namespace regindep
