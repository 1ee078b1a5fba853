#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "beepid/montecarlo.hpp"

namespace beepid {

/// Missing file, malformed JSON, unknown key or a value of the wrong type.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds a SimConfig from a flat JSON object. Absent keys keep their defaults;
/// grids are arrays (a bare scalar is taken as a one-element grid).
SimConfig config_from_json(const nlohmann::json& doc);

/// Every field, including defaults, so the dump reloads to the same config.
nlohmann::json config_to_json(const SimConfig& cfg);

SimConfig load_config(const std::filesystem::path& path);

/// Applies one `key=value` override. Grid values are comma lists.
void apply_override(SimConfig& cfg, std::string_view assignment);

}  // namespace beepid
