// Copyright 2026 The cryochain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#pragma once

// JSON run configurations mapped onto the library's domain types.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cryochain/budget.hpp"
#include "cryochain/error.hpp"
#include "cryochain/noisecal.hpp"
#include "cryochain/readout.hpp"
#include "cryochain/rfnet.hpp"
#include "cryochain/output.hpp"

namespace cryochain::app {

/// Invalid or inconsistent configuration (exit code 2).
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

struct LoadedConfig {
  Json doc;
  std::filesystem::path path;
  std::filesystem::path base_dir;
};

/// Parses the file and applies "dotted.key=value" overrides. Values are
/// read as JSON when they parse, as strings otherwise.
LoadedConfig load_config(const std::filesystem::path& path,
                         const std::vector<std::string>& overrides);

void apply_override(Json& doc, std::string_view assignment);
void set_path(Json& doc, std::string_view dotted_key, Json value);

/// Reads a config value, naming the key in any error.
double get_number(const Json& j, std::string_view key);
double get_number(const Json& j, std::string_view key, double fallback);
std::uint64_t get_count(const Json& j, std::string_view key);
std::uint64_t get_count(const Json& j, std::string_view key,
                        std::uint64_t fallback);

/// {"start_hz", "stop_hz", "points"} or {"points_hz": [...]}.
rfnet::FrequencyGrid parse_grid(const Json& j);

/// Array of element objects; .s2p paths resolve against base_dir.
rfnet::SignalChain parse_chain(const Json& elements,
                               const std::filesystem::path& base_dir);

/// {"enr_db"} or {"t_hot_k"}, with optional "t_cold_k" (default 290 K).
noisecal::NoiseSourceSpec parse_source(const Json& j);

readout::ResonatorModel parse_resonator(const Json& j);

budget::DeploymentSpec parse_deployment(const Json& j);
budget::StageSpec parse_stage(const Json& j);
budget::BiasTopology parse_topology(const Json& j);

}  // namespace cryochain::app
