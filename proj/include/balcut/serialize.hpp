#pragma once

#include <json.hpp>
#include <string>

#include "balcut/driver.hpp"

namespace balcut {

inline constexpr int kOutcomeSchemaVersion = 1;

std::string build_id();

nlohmann::json to_json(const DualCoefficients& dual);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const RunConfig& config);
nlohmann::json to_json(const TraceRecord& rec);
// Versioned document: schema, build, config, seed, outcome and its payload.
// Vertex ids are mapped through `ids` when given.
nlohmann::json outcome_to_json(const PartitionOutcome& outcome, const RunConfig& config,
                               const std::vector<std::size_t>* ids = nullptr);
nlohmann::json to_json(const Decomposition& dec, const std::vector<std::size_t>* ids = nullptr);

// Accepts a bare certificate object or an outcome document holding one.
Certificate certificate_from_json(const nlohmann::json& doc, std::size_t n);

}  // namespace balcut
