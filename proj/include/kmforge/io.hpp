#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kmforge/algebra.hpp"
#include "kmforge/density.hpp"
#include "kmforge/one_step.hpp"
#include "kmforge/omega_verify.hpp"
#include "kmforge/stone.hpp"
#include "kmforge/terms.hpp"

namespace kmforge {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "km-forge/1";

/// {"elements": [names], "leq": [[bool]]} or {"poset": {"points": n, "leq": [[bool]]}}.
/// Operation tables are always recomputed and validated.
/// Throws FormatError or ValidationError.
Algebra algebra_from_json(const json& j);

/// Throws IoError when the file cannot be read, FormatError on bad JSON.
Algebra load_algebra(const std::string& path);

json algebra_to_json(const Algebra& h);
json poset_to_json(const FinitePoset& p);

/// A fresh report object carrying the schema version.
json report(const std::string& kind);

json delta_to_json(const KMAlgebra& k);
json one_step_to_json(const OneStepResult& r);
json schema_to_json(const SchemaReport& r);
json spectrum_to_json(const Algebra& h, const Spectrum& s);
json comparison_to_json(const Comparison& c);
json open_statement_to_json(const OpenStatementReport& r);
json omega_to_json(const omega::OmegaReport& r);
json remark_to_json(const omega::RemarkReport& r);

/// Hasse diagram: one node per element, an edge per covering pair, bottom
/// first. `notes` (when non-empty) adds a second label line per element.
std::string to_dot(const Algebra& h, const std::vector<std::string>& notes = {});

}  // namespace kmforge
