#pragma once

#include <string>

#include <json.hpp>

#include "xlc/core/types.hpp"

namespace xlc::core {

// Parses the run configuration document. Defaults are filled for omitted
// keys; invariant violations name the offending field.
RunConfig load_config(const std::string& path);
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);

Ratio parse_ratio(const std::string& text);

}  // namespace xlc::core
