#include "regindep/report.hpp"

#include "regindep/families.hpp"
#include "regindep/graph_io.hpp"

namespace regindep {

Json to_json(const Graph& g, const RegKIndepResult& r, int k)
{
    Json per_class = Json::object();
    for (const auto& [j, v] : r.per_class)
        per_class[std::to_string(j)] = v;
    return Json{{"graphId", encode_graph6(g)}, {"n", g.order()},      {"m", g.size()},
                {"k", k},                      {"value", r.value},    {"perClass", per_class},
                {"bestDegree", r.best_degree}, {"witness", r.witness}};
}

Json to_json(const ParityRow& row)
{
    Json j{{"family", row.family},
           {"params", row.params},
           {"n", row.n},
           {"k", row.k},
           {"formula", row.formula.value},
           {"formulaTag", row.formula.tag},
           {"solver", row.solver},
           {"oracle", row.oracle ? Json(*row.oracle) : Json(nullptr)},
           {"status", parity_status_name(row.status)}};
    if (row.formula.discrepancy) {
        const auto& d = *row.formula.discrepancy;
        j["discrepancyNote"] = Json{{"family", d.family},
                                    {"paperValue", d.paper_value},
                                    {"correctedValue", d.corrected_value},
                                    {"reason", d.reason}};
    } else {
        j["discrepancyNote"] = nullptr;
    }
    return j;
}

Json to_json(const BoundCertificate& c)
{
    Json j{{"theoremTag", c.theorem},
           {"graphId", c.graph_id},
           {"k", c.k ? Json(*c.k) : Json(nullptr)},
           {"n", c.n},
           {"m", c.m},
           {"minDegree", c.min_degree},
           {"lhsKind", c.lhs_kind},
           {"lhs", c.lhs},
           {"rhs", c.rhs},
           {"rhsExpr", c.rhs_expr},
           {"exactCheck", c.exact_check},
           {"chiMode", chi_mode_name(c.chi_mode)},
           {"chi", c.chi},
           {"chiLower", c.chi_lower},
           {"chiUpper", c.chi_upper},
           {"escalated", c.escalated},
           {"verdict", verdict_name(c.verdict)}};
    if (c.literal_verdict)
        j["literalVerdict"] = verdict_name(*c.literal_verdict);
    if (!c.note.empty())
        j["note"] = c.note;
    return j;
}

namespace {

Json bound_json(const RegimeBound& b)
{
    return Json{{"regime", regime_name(b.regime)},
                {"lower", Json{{"num", b.lower.num}, {"den", b.lower.den}}},
                {"upper", b.upper}};
}

}  // namespace

Json to_json(const TreeBoundInstance& inst)
{
    const auto& p = inst.profile;
    return Json{{"regime", regime_name(inst.regime)},
                {"graphId", inst.graph6},
                {"seed", inst.seed},
                {"n", inst.n},
                {"t", inst.t},
                {"n1", p.n1},
                {"n2", p.n2},
                {"N3", p.big},
                {"f", p.f ? Json(*p.f) : Json(nullptr)},
                {"alpha", inst.alpha},
                {"fastAlpha", inst.fast_alpha},
                {"bound", bound_json(inst.bound)},
                {"boundOk", inst.bound_ok},
                {"fastOk", inst.fast_ok},
                {"leafIdentityOk", inst.leaf_identity_ok},
                {"leafBoundOk", inst.leaf_bound_ok},
                {"pass", inst.pass()}};
}

Json to_json(const FigureCheck& fig)
{
    return Json{{"figure", fig.name},
                {"graphId", fig.graph6},
                {"expected", fig.expected},
                {"alpha", fig.alpha},
                {"pass", fig.pass}};
}

Json to_json(const Thm31Report& report)
{
    Json instances = Json::array();
    for (const auto& i : report.instances)
        instances.push_back(to_json(i));
    Json figures = Json::array();
    for (const auto& f : report.figures)
        figures.push_back(to_json(f));
    return Json{{"instances", instances}, {"figures", figures}, {"violations", report.violations}};
}

Json to_json(const NGRecord& rec, int n)
{
    return Json{{"graphId", encode_graph6(graph_from_mask(n, rec.mask))},
                {"k", rec.k},
                {"aG", rec.a_g},
                {"aGbar", rec.a_gbar},
                {"sum", rec.sum()},
                {"product", rec.product()}};
}

Json to_json(const ScanViolation& v, int n)
{
    return Json{{"check", v.check},
                {"graphId", encode_graph6(graph_from_mask(n, v.mask))},
                {"k", v.k},
                {"detail", v.detail}};
}

Json summary_json(const NGScanReport& report)
{
    Json checked = Json::object();
    for (const auto& [name, count] : report.checked)
        checked[name] = count;
    return Json{{"n", report.n},
                {"k", report.ks},
                {"graphs", report.graphs},
                {"records", report.records.size()},
                {"violations", report.violations.size()},
                {"checked", checked}};
}

}  // namespace regindep
