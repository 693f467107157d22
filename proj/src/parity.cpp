#include "regindep/parity.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "regindep/errors.hpp"
#include "regindep/oracle.hpp"
#include "regindep/solver.hpp"

namespace regindep {

Allowlist parse_allowlist(const std::string& text)
{
    Allowlist out;
    try {
        const auto doc = nlohmann::json::parse(text);
        out.version = doc.at("version").get<int>();
        for (const auto& entry : doc.at("entries"))
            out.families.insert(entry.at("family").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("allowlist: ") + e.what());
    }
    if (out.version != 1)
        throw ParseError("allowlist: unsupported version " + std::to_string(out.version));
    return out;
}

Allowlist load_allowlist(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("allowlist: cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_allowlist(buf.str());
}

std::string default_allowlist_path()
{
    return REGINDEP_DEFAULT_ALLOWLIST;
}

std::string parity_status_name(ParityStatus s)
{
    switch (s) {
    case ParityStatus::Match:
        return "match";
    case ParityStatus::DocumentedDiscrepancy:
        return "documented_discrepancy";
    case ParityStatus::Mismatch:
        return "mismatch";
    }
    return "?";
}

ParityRow parity_row(std::string family, std::string params, const Graph& g,
                     const FormulaResult& formula, int k, const Allowlist& allowlist,
                     int oracle_cap)
{
    ParityRow row;
    row.family = std::move(family);
    row.params = std::move(params);
    row.n = g.order();
    row.k = k;
    row.formula = formula;
    row.solver = alpha_kreg(g, k).value;
    try {
        row.oracle = oracle_alpha_kreg(g, k, oracle_cap);
    } catch (const CapExceeded&) {
        row.oracle.reset();
    }

    if (row.oracle && *row.oracle != row.solver)
        row.status = ParityStatus::Mismatch;
    else if (formula.value == row.solver)
        row.status = ParityStatus::Match;
    else if (formula.discrepancy && allowlist.contains(formula.discrepancy->family) &&
             formula.discrepancy->corrected_value == row.solver)
        row.status = ParityStatus::DocumentedDiscrepancy;
    else
        row.status = ParityStatus::Mismatch;
    return row;
}

Graph family_graph(const FamilySpec& spec)
{
    if (spec.name == "complete")
        return make_complete(spec.n);
    if (spec.name == "path")
        return make_path(spec.n);
    if (spec.name == "cycle")
        return make_cycle(spec.n);
    if (spec.name == "star")
        return make_star(spec.n);
    if (spec.name == "multipartite")
        return make_complete_multipartite(spec.parts);
    if (spec.name == "spider")
        return make_spider(SpiderSpec{spec.parts});
    throw PreconditionError("unsupported family: " + spec.name);
}

FormulaResult family_formula(const FamilySpec& spec, int k)
{
    if (spec.name == "complete")
        return cf_complete(spec.n, k);
    if (spec.name == "path")
        return cf_path(spec.n, k);
    if (spec.name == "cycle")
        return cf_cycle(spec.n, k);
    if (spec.name == "star")
        return cf_star(spec.n, k);
    if (spec.name == "multipartite")
        return cf_multipartite(spec.parts, k);
    if (spec.name == "spider")
        return cf_spider(SpiderSpec{spec.parts}, k);
    throw PreconditionError("unsupported family: " + spec.name);
}

std::string family_params(const FamilySpec& spec)
{
    if (spec.name == "multipartite" || spec.name == "spider") {
        std::string out = spec.name == "spider" ? "legs=" : "parts=";
        for (std::size_t i = 0; i < spec.parts.size(); ++i)
            out += (i ? "," : "") + std::to_string(spec.parts[i]);
        return out;
    }
    return "n=" + std::to_string(spec.n);
}

ParityRow family_parity(const FamilySpec& spec, int k, const Allowlist& allowlist, int oracle_cap)
{
    const Graph g = family_graph(spec);
    return parity_row(spec.name, family_params(spec), g, family_formula(spec, k), k, allowlist,
                      oracle_cap);
}

}  // namespace regindep
