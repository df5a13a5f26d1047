#pragma once

#include <string>

#include <json.hpp>

#include "gtbasis/gl_rep.hpp"
#include "gtbasis/so_rep.hpp"
#include "gtbasis/verify.hpp"

namespace gtb {

using Json = nlohmann::ordered_json;

/// {"dim": N, "entries": [[row, col, "p/q"], ...]} sorted by (row, col).
Json operator_json(const Operator& op);
/// {"rows": [[row 1], [row 2], ...]} with row k holding λ_{k,1..k}.
Json pattern_json(const GTPatternA& p);
/// {"sigma": [σ_1..σ_n], "rows": [...], "primed_rows": [...]}, rows k = 1..n.
Json pattern_json(const PatternB& p);

Json representation_json(const GlRepresentation& rep);
Json representation_json(const SoRepresentation& rep);
/// {"checks": [{"name", "pass", "witness"}], "summary": "pass" | "fail"}.
Json report_json(const VerificationReport& report);

/// Header "generator,row,col,value" and one line per stored entry.
std::string operators_csv(const Representation& rep);
std::string report_csv(const VerificationReport& report);

/// Compact one-line rendering of a pattern, e.g. "s=0,1 | -1 | 0,-1 ' -1,-1".
std::string pattern_text(const GTPatternA& p);
std::string pattern_text(const PatternB& p);

std::string csv_escape(const std::string& field);

}  // namespace gtb
