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

namespace cryochain::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitNumerical = 1,
  kExitInput = 2,
};

struct RunOptions {
  std::string command;
  std::filesystem::path config;
  std::filesystem::path out_dir;
  std::optional<std::uint64_t> seed;
  /// "key=v1,v2,..." with a dotted config path as key.
  std::optional<std::string> sweep;
  /// "key=value" config overrides, applied in order.
  std::vector<std::string> overrides;
  unsigned workers = 1;
};

/// Runs one command. Human-readable output goes to `out`, diagnostics to
/// the log. Returns the process exit code.
int run(const RunOptions& options, std::ostream& out);

/// Command-line front end.
int run_cli(int argc, char** argv);

/// Applies CRYOCHAIN_LOG_LEVEL to the default logger.
void configure_logging();

}  // namespace cryochain::app
