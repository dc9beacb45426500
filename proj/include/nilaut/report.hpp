#pragma once

// Machine-readable (JSON) and plain-text renderings of analysis results.
// The JSON schemas are described in docs/FORMATS.md.

#include <string>

#include <json.hpp>

#include "nilaut/autos.hpp"
#include "nilaut/invariants.hpp"
#include "nilaut/theorems.hpp"

namespace nilaut {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

Json analysis_json(const FiniteGroup& g, const StructureSummary& s);
std::string analysis_text(const FiniteGroup& g, const StructureSummary& s);

Json autset_json(const FiniteGroup& g, const AutSet& s);
std::string autset_text(const FiniteGroup& g, const AutSet& s);

Json verdict_json(const ClassificationVerdict& v);
std::string verdict_text(const ClassificationVerdict& v);

Json schur_json(const SchurReport& s);
Json theorem_report_json(const TheoremReport& r);
std::string theorem_report_text(const TheoremReport& r);

// Timings change from run to run, so they are left out unless asked for.
Json suite_json(const SuiteReport& r, bool with_timings = false);
std::string suite_text(const SuiteReport& r);

}  // namespace nilaut
