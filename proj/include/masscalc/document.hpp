#pragma once

#include <masscalc/demos.hpp>
#include <masscalc/svg.hpp>

#include <optional>
#include <string>

namespace masscalc {

/// Exit codes shared by run_document and the CLI.
enum class RunStatus : int {
    Pass = 0,
    VerdictFailure = 1,
    ParseOrSchemaError = 2,
    FieldOrDimensionError = 3,
};

struct RunResult {
    RunStatus status = RunStatus::Pass;
    Json output; // {"field":..., "dimension":..., "reports":[...], "pass":...}
                 // or {"error":..., "message":...} for rejected documents
    std::string output_text() const { return output.dump(2) + "\n"; }
};

/// Executes a UTF-8 JSON document:
///   {"field": "rational"|"fp:<p>"|"float", "dimension": n,
///    "points": {name: [...]}, "sets": {name: [...]}, "queries": [...]}
/// Queries run in order; the result is deterministic. When `field_override`
/// is given it supplies a missing "field" entry and must agree with a
/// declared one. A scene collecting the geometry of executed queries is
/// filled when `scene` is non-null.
RunResult run_document(const std::string& text,
                       const std::optional<Field>& field_override = std::nullopt,
                       SvgScene* scene = nullptr);

} // namespace masscalc
