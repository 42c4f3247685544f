#pragma once

#include <nlohmann/json.hpp>

#include "nclkit/experiment.hpp"
#include "nclkit/invariants.hpp"
#include "nclkit/ncl.hpp"
#include "nclkit/obstruction.hpp"
#include "nclkit/surface.hpp"

namespace nclkit {

// Every top-level document carries "schema_version": kSchemaVersion.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const SurfaceParams& s);
nlohmann::json to_json(const HalfGraphWitness& w);
nlohmann::json to_json(const MultipartiteWitness& w);
// {"b": [...], "a": [...]}
nlohmann::json to_json(const NestedComplexitySequence& cert);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const ObstructionReport& report);
nlohmann::json to_json(const ExperimentSummary& summary);

// Reads the "b" and "a" arrays; other keys are ignored. Throws parse_error.
NestedComplexitySequence certificate_from_json(const nlohmann::json& doc);

}  // namespace nclkit
