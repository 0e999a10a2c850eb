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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cryochain/app.hpp"
#include "cryochain/config.hpp"

namespace cryochain::app {

struct CommandContext {
  const LoadedConfig& config;
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  std::optional<std::string> sweep;
  unsigned workers = 1;
  std::ostream& out;
};

struct Sweep {
  std::string key;
  std::vector<Json> values;
};

/// "key=v1,v2,..."; each value is read as JSON when it parses.
Sweep parse_sweep(const std::string& text);

/// Each returns the exit code; invalid input and numerical failures are
/// reported by throwing.
int cmd_chain(const CommandContext& ctx);
int cmd_noisecal(const CommandContext& ctx);
int cmd_readout(const CommandContext& ctx);
int cmd_budget(const CommandContext& ctx);

}  // namespace cryochain::app
