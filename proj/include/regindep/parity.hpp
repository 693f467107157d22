#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "regindep/closed_forms.hpp"
#include "regindep/graph.hpp"

namespace regindep {

/// Discrepancy families that are known and accepted.
struct Allowlist {
    int version = 0;
    std::set<std::string> families;

    bool contains(const std::string& family) const { return families.count(family) > 0; }
};

/// Reads the versioned allowlist file; throws ParseError on malformed
/// content or unreadable files.
Allowlist load_allowlist(const std::string& path);
Allowlist parse_allowlist(const std::string& text);
/// The file shipped in data/.
std::string default_allowlist_path();

enum class ParityStatus { Match, DocumentedDiscrepancy, Mismatch };

std::string parity_status_name(ParityStatus s);

struct ParityRow {
    std::string family;
    /// Family parameters as text, e.g. "n=7" or "parts=2,2,3".
    std::string params;
    int n = 0;
    int k = 0;
    FormulaResult formula;
    int solver = 0;
    /// Absent when some degree class exceeds the oracle cap.
    std::optional<int> oracle;
    ParityStatus status = ParityStatus::Match;
};

/// Compares a closed-form value with the solver and, when within the cap,
/// the oracle. A formula value different from the solver is a documented
/// discrepancy only when its note belongs to an allowlisted family and the
/// corrected value equals the solver; otherwise it is a mismatch, as is any
/// solver/oracle disagreement.
ParityRow parity_row(std::string family, std::string params, const Graph& g,
                     const FormulaResult& formula, int k, const Allowlist& allowlist,
                     int oracle_cap);

/// Supported families: complete, path, cycle, star (parameter n),
/// multipartite (parts), spider (legs; k >= 2 only).
struct FamilySpec {
    std::string name;
    int n = 0;
    std::vector<int> parts;
};

/// Graph and closed form of a family member. Throws PreconditionError for
/// unknown families and UnsupportedShape for unsupported multipartite
/// shapes.
Graph family_graph(const FamilySpec& spec);
FormulaResult family_formula(const FamilySpec& spec, int k);
std::string family_params(const FamilySpec& spec);

ParityRow family_parity(const FamilySpec& spec, int k, const Allowlist& allowlist, int oracle_cap);

}  // namespace regindep
