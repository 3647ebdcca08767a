#pragma once

#include <string>
#include <vector>

#include "schubert/decomposition.hpp"
#include "schubert/sphericity.hpp"

// Text, CSV, DOT and JSON renderings of the core reports. Every function is
// deterministic for a fixed input, so outputs can be used as golden files.

namespace schubert {

// Heads with their classes and component sizes.
std::string render_heads_text(const LeviContext& levi);
std::string render_heads_json(const LeviContext& levi);
std::string render_heads_csv(const LeviContext& levi);
// Covering graph with one fill color per component and bold head nodes;
// edges whose label leaves the reflection set are dashed.
std::string render_heads_dot(const LeviContext& levi);

// Covering relations of the lower interval.
std::string render_hasse_text(const SchubertContext& ctx);
std::string render_hasse_csv(const SchubertContext& ctx);
std::string render_hasse_dot(const SchubertContext& ctx);

// Decomposition report views; the JSON view lives in decomposition.hpp.
std::string render_report_text(const DecompositionReport& rep);
std::string render_report_csv(const DecompositionReport& rep);

// Classification tables.
std::string render_verdicts_text(const std::vector<SphericityVerdict>& table);
std::string render_verdicts_csv(const std::vector<SphericityVerdict>& table);
std::string render_verdicts_json(const std::vector<SphericityVerdict>& table);

std::string to_string(const IrreducibleLabel& label);  // "((1),(1),(1))"

}  // namespace schubert
