#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "regindep/bounds.hpp"
#include "regindep/errors.hpp"
#include "regindep/families.hpp"
#include "regindep/graph_io.hpp"
#include "regindep/oracle.hpp"
#include "regindep/parity.hpp"
#include "regindep/report.hpp"
#include "regindep/scans.hpp"
#include "regindep/trees.hpp"

using namespace regindep;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitViolation = 4;

// "0..7", "0,1,2,5" or a mix such as "0..3,7".
std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw ParseError("empty item in list '" + text + "'");
        try {
            const auto dots = item.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stoi(item));
                continue;
            }
            const int lo = std::stoi(item.substr(0, dots));
            const int hi = std::stoi(item.substr(dots + 2));
            if (lo > hi)
                throw ParseError("empty range '" + item + "'");
            for (int v = lo; v <= hi; ++v)
                out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad integer list '" + text + "'");
        }
    }
    if (out.empty())
        throw ParseError("empty list");
    return out;
}

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

enum class Format { Json, Jsonl, Tsv };

struct Options {
    std::string input;
    std::string graph6;
    std::string named;
    std::string family;
    std::string n = "";
    std::string t = "";
    std::string parts;
    std::string legs;
    std::string k = "0";
    std::string theorem = "all";
    std::uint64_t seed = 0;
    int samples = 200;
    std::uint64_t chi_budget = kDefaultChiBudget;
    int oracle_cap = kDefaultOracleClassCap;
    int enum_cap = 7;
    std::string output;
    std::string format = "json";
    std::string allowlist;
    bool no_characterizations = false;
};

Format format_of(const Options& o)
{
    if (o.format == "json")
        return Format::Json;
    if (o.format == "jsonl")
        return Format::Jsonl;
    if (o.format == "tsv")
        return Format::Tsv;
    throw PreconditionError("unknown format " + o.format);
}

std::string tsv_cell(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "";
    return v.dump();
}

// Writes a list of flat records in the selected format; `envelope` is the
// JSON document used for --format json.
void emit(std::ostream& out, Format f, const std::vector<Json>& rows, const Json& envelope)
{
    switch (f) {
    case Format::Json:
        out << envelope.dump(2) << '\n';
        break;
    case Format::Jsonl:
        for (const auto& r : rows)
            out << r.dump() << '\n';
        break;
    case Format::Tsv: {
        // Columns are the union of keys in first-seen order; absent fields
        // are empty cells.
        std::vector<std::string> columns;
        for (const auto& r : rows)
            for (const auto& [key, value] : r.items())
                if (std::find(columns.begin(), columns.end(), key) == columns.end())
                    columns.push_back(key);
        if (columns.empty())
            break;
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "\t" : "") << columns[i];
        out << '\n';
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                out << (i ? "\t" : "");
                if (r.contains(columns[i]))
                    out << tsv_cell(r[columns[i]]);
            }
            out << '\n';
        }
        break;
    }
    }
}

int single_int(const std::string& text, const char* name)
{
    const auto v = parse_int_list(text);
    if (v.size() != 1)
        throw PreconditionError(std::string("--") + name + " takes a single value here");
    return v.front();
}

std::vector<int> parts_of(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            out.push_back(std::stoi(item));
        } catch (const std::logic_error&) {
            throw ParseError("bad size list '" + text + "'");
        }
    return out;
}

// Resolves the graph named by --input, --graph6, --named or --family.
Graph input_graph(const Options& o)
{
    const int given = !o.input.empty() + !o.graph6.empty() + !o.named.empty() + !o.family.empty();
    if (given != 1)
        throw PreconditionError("give exactly one of --input, --graph6, --named, --family");
    if (!o.input.empty())
        return parse_graph_text(read_file(o.input));
    if (!o.graph6.empty())
        return decode_graph6(o.graph6);
    if (!o.named.empty())
        return make_named(o.named);
    FamilySpec spec{o.family, 0, {}};
    if (o.family == "multipartite")
        spec.parts = parts_of(o.parts);
    else if (o.family == "spider")
        spec.parts = parts_of(o.legs);
    else
        spec.n = single_int(o.n, "n");
    return family_graph(spec);
}

int cmd_compute(const Options& o, std::ostream& out)
{
    const Graph g = input_graph(o);
    std::vector<Json> rows;
    for (int k : parse_int_list(o.k))
        rows.push_back(to_json(g, alpha_kreg(g, k), k));
    emit(out, format_of(o), rows, rows.size() == 1 ? rows.front() : Json(rows));
    return 0;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    const Graph g = input_graph(o);
    std::vector<Json> rows;
    for (int k : parse_int_list(o.k))
        rows.push_back(Json{{"graphId", encode_graph6(g)}, {"k", k}, {"value", oracle_alpha_kreg(g, k, o.oracle_cap)}});
    emit(out, format_of(o), rows, rows.size() == 1 ? rows.front() : Json(rows));
    return 0;
}

int cmd_family(const Options& o, std::ostream& out)
{
    const Allowlist allow = load_allowlist(o.allowlist.empty() ? default_allowlist_path() : o.allowlist);
    static const std::set<std::string> known{"complete", "path", "cycle", "star", "multipartite", "spider"};
    if (!known.count(o.family))
        throw PreconditionError("unsupported family: " + o.family);
    std::vector<FamilySpec> specs;
    if (o.family == "multipartite") {
        specs.push_back({o.family, 0, parts_of(o.parts)});
    } else if (o.family == "spider") {
        specs.push_back({o.family, 0, parts_of(o.legs)});
    } else {
        if (o.n.empty())
            throw PreconditionError("--n is required for family " + o.family);
        for (int n : parse_int_list(o.n))
            specs.push_back({o.family, n, {}});
    }
    std::vector<Json> rows;
    int counts[3] = {0, 0, 0};
    int skipped = 0;
    for (const auto& spec : specs) {
        for (int k : parse_int_list(o.k)) {
            ParityRow row;
            try {
                row = family_parity(spec, k, allow, o.oracle_cap);
            } catch (const UnsupportedShape&) {
                throw;
            } catch (const PreconditionError&) {
                ++skipped;
                continue;
            }
            ++counts[static_cast<int>(row.status)];
            rows.push_back(to_json(row));
        }
    }
    const Json summary{{"match", counts[0]},
                       {"documentedDiscrepancy", counts[1]},
                       {"mismatch", counts[2]},
                       {"skipped", skipped},
                       {"allowlistVersion", allow.version}};
    emit(out, format_of(o), rows, Json{{"rows", rows}, {"summary", summary}});
    if (format_of(o) != Format::Json)
        std::cerr << summary.dump() << '\n';
    return counts[2] > 0 ? kExitViolation : 0;
}

int cmd_tree_bounds(const Options& o, std::ostream& out)
{
    Thm31Report report;
    if (o.n.empty() != o.t.empty())
        throw PreconditionError("--n and --t go together");
    if (o.n.empty())
        report = verify_thm31(o.samples, o.seed);
    else
        report = verify_thm31_at(single_int(o.n, "n"), single_int(o.t, "t"), o.samples, o.seed);
    std::vector<Json> rows;
    for (const auto& i : report.instances)
        rows.push_back(to_json(i));
    for (const auto& f : report.figures)
        rows.push_back(to_json(f));
    emit(out, format_of(o), rows, to_json(report));
    if (format_of(o) != Format::Json)
        std::cerr << Json{{"violations", report.violations}}.dump() << '\n';
    return report.violations > 0 ? kExitViolation : 0;
}

std::vector<BoundCertificate> certificates_for(LineGraphInstance& inst, const std::string& theorem)
{
    if (theorem == "all")
        return all_applicable_certificates(inst);
    if (theorem == "5.1")
        return {verify_thm51(inst)};
    if (theorem == "5.2")
        return {verify_thm52(inst)};
    if (theorem == "cor5.1")
        return {verify_cor51(inst)};
    if (theorem == "5.3" || theorem == "5.4") {
        std::vector<BoundCertificate> out;
        for (LgShape s : all_shapes())
            if (shape_theorem(s).rfind("thm" + theorem, 0) == 0 && shape_holds(inst.graph(), s))
                out.push_back(verify_thm53_54(inst, s));
        if (out.empty())
            throw PreconditionError("no Theorem " + theorem + " shape applies to this graph");
        return out;
    }
    if (theorem == "lemmas") {
        std::vector<BoundCertificate> out;
        for (RepLemma l : all_rep_lemmas())
            if (rep_lemma_applies(inst.graph(), l))
                out.push_back(verify_rep_lemma(inst, l));
        return out;
    }
    throw PreconditionError("unknown theorem '" + theorem + "' (5.1, 5.2, cor5.1, 5.3, 5.4, lemmas, all)");
}

int cmd_lg_bounds(const Options& o, std::ostream& out)
{
    const Graph g = input_graph(o);
    std::vector<Json> rows;
    bool failed = false;
    for (int k : parse_int_list(o.k)) {
        LineGraphInstance inst(g, k, o.chi_budget);
        for (const auto& c : certificates_for(inst, o.theorem)) {
            failed = failed || c.verdict == Verdict::Fails || c.literal_verdict == Verdict::Fails;
            rows.push_back(to_json(c));
        }
    }
    emit(out, format_of(o), rows, Json(rows));
    return failed ? kExitViolation : 0;
}

int cmd_ng_scan(const Options& o, std::ostream& out)
{
    ScanOptions opt;
    opt.threads = default_thread_count();
    opt.cap = o.enum_cap;
    opt.characterizations = !o.no_characterizations;
    const int n = single_int(o.n, "n");
    const auto report = ng_scan(n, parse_int_list(o.k), opt);
    const Format f = format_of(o);
    std::vector<Json> violations;
    for (const auto& v : report.violations)
        violations.push_back(to_json(v, n));
    if (f == Format::Json) {
        Json records = Json::array();
        for (const auto& r : report.records)
            records.push_back(to_json(r, n));
        Json doc = summary_json(report);
        doc["violationList"] = violations;
        doc["recordList"] = std::move(records);
        out << doc.dump(2) << '\n';
    } else {
        // Stream records without holding them all as JSON.
        if (f == Format::Tsv)
            out << "graphId\tk\taG\taGbar\tsum\tproduct\n";
        for (const auto& r : report.records) {
            const Json j = to_json(r, n);
            if (f == Format::Jsonl) {
                out << j.dump() << '\n';
            } else {
                out << j["graphId"].get<std::string>() << '\t' << r.k << '\t' << r.a_g << '\t' << r.a_gbar
                    << '\t' << r.sum() << '\t' << r.product() << '\n';
            }
        }
        std::cerr << summary_json(report).dump() << '\n';
        for (const auto& v : violations)
            std::cerr << v.dump() << '\n';
    }
    return report.violations.empty() ? 0 : kExitViolation;
}

void add_graph_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("--input", o.input, "graph6 or edge-list file ('-' for stdin)");
    cmd->add_option("--graph6", o.graph6, "graph6 string");
    cmd->add_option("--named", o.named, "octahedron, icosahedron, remark1, fan:<n>, apollonian:<d>");
    cmd->add_option("--family", o.family, "complete, path, cycle, star, multipartite, spider");
    cmd->add_option("--n", o.n, "order (family members)");
    cmd->add_option("--parts", o.parts, "part sizes, e.g. 2,2,3");
    cmd->add_option("--legs", o.legs, "spider leg orders, e.g. 5,5,4");
}

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--output", o.output, "write to this file instead of stdout");
    cmd->add_option("--format", o.format, "json, jsonl or tsv")->check(CLI::IsMember({"json", "jsonl", "tsv"}));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact regular k-independence solver and verification suites"};
    app.require_subcommand(1);
    Options o;

    auto* compute = app.add_subcommand("compute", "alpha_kreg with per-class values and a witness");
    add_graph_options(compute, o);
    compute->add_option("--k", o.k, "k values, e.g. 2 or 0..5 or 0,1,2,5");
    add_common(compute, o);

    auto* oracle = app.add_subcommand("oracle", "alpha_kreg by exhaustive enumeration");
    add_graph_options(oracle, o);
    oracle->add_option("--k", o.k, "k values");
    oracle->add_option("--oracle-cap", o.oracle_cap, "largest degree class enumerated")->check(CLI::PositiveNumber);
    add_common(oracle, o);

    auto* family = app.add_subcommand("family", "closed form vs solver vs oracle");
    family->add_option("--family", o.family, "complete, path, cycle, star, multipartite, spider")->required();
    family->add_option("--n", o.n, "orders, e.g. 2..20");
    family->add_option("--parts", o.parts, "part sizes (multipartite)");
    family->add_option("--legs", o.legs, "leg orders (spider)");
    family->add_option("--k", o.k, "k values, e.g. 0..7");
    family->add_option("--oracle-cap", o.oracle_cap, "largest degree class enumerated")->check(CLI::PositiveNumber);
    family->add_option("--allowlist", o.allowlist, "discrepancy allowlist file");
    add_common(family, o);

    auto* trees = app.add_subcommand("tree-bounds", "tree bound sweep at k=2");
    trees->add_option("--n", o.n, "tree order (with --t); omit both for the full regime sweep");
    trees->add_option("--t", o.t, "n minus the diameter");
    trees->add_option("--samples", o.samples, "trees per regime")->check(CLI::NonNegativeNumber);
    trees->add_option("--seed", o.seed, "first seed");
    add_common(trees, o);

    auto* lg = app.add_subcommand("lg-bounds", "line-graph bound certificates");
    add_graph_options(lg, o);
    lg->add_option("--k", o.k, "k values");
    lg->add_option("--theorem", o.theorem, "5.1, 5.2, cor5.1, 5.3, 5.4, lemmas or all");
    lg->add_option("--chi-budget", o.chi_budget, "node budget of the chi_k search")->check(CLI::PositiveNumber);
    add_common(lg, o);

    auto* ng = app.add_subcommand("ng-scan", "exhaustive complement-pair scan");
    ng->add_option("--n", o.n, "order")->required();
    ng->add_option("--k", o.k, "k values");
    ng->add_option("--enum-cap", o.enum_cap, "largest order enumerated")->check(CLI::PositiveNumber);
    ng->add_flag("--no-characterizations", o.no_characterizations, "only the sum and product bounds");
    add_common(ng, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) {
            std::cerr << "error: cannot write " << o.output << '\n';
            return kExitUsage;
        }
        out = &file;
    }

    try {
        if (app.got_subcommand(compute))
            return cmd_compute(o, *out);
        if (app.got_subcommand(oracle))
            return cmd_oracle(o, *out);
        if (app.got_subcommand(family))
            return cmd_family(o, *out);
        if (app.got_subcommand(trees))
            return cmd_tree_bounds(o, *out);
        if (app.got_subcommand(lg))
            return cmd_lg_bounds(o, *out);
        if (app.got_subcommand(ng))
            return cmd_ng_scan(o, *out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
