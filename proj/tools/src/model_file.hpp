#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "skipqn/model.hpp"

namespace skipqn::cli {

// {"stations": [{"name", "capacity", "service_time"}...],
//  "routing": [[...]...],
//  "reference": <station name or zero-based index, optional>}
// Schema problems throw CliError(InvalidModel); structural problems come out
// of validate_model as skipqn::Error.
NetworkModel parse_model(const nlohmann::json& document);
NetworkModel load_model(const std::filesystem::path& path);

nlohmann::json model_to_json(const NetworkModel& model);

}  // namespace skipqn::cli
