#pragma once

#include <json.hpp>

#include "regindep/bounds.hpp"
#include "regindep/graph.hpp"
#include "regindep/parity.hpp"
#include "regindep/scans.hpp"
#include "regindep/solver.hpp"
#include "regindep/trees.hpp"

namespace regindep {

using Json = nlohmann::ordered_json;

// Field names below are the external output contract.

Json to_json(const Graph& g, const RegKIndepResult& r, int k);
Json to_json(const ParityRow& row);
Json to_json(const BoundCertificate& c);
Json to_json(const TreeBoundInstance& inst);
Json to_json(const FigureCheck& fig);
Json to_json(const Thm31Report& report);
/// n is needed to turn the mask back into a graph6 id.
Json to_json(const NGRecord& rec, int n);
Json to_json(const ScanViolation& v, int n);
Json summary_json(const NGScanReport& report);

}  // namespace regindep
