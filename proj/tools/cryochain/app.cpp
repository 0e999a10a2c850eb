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
#include "cryochain/app.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "cryochain/commands.hpp"
#include "cryochain/config.hpp"

namespace cryochain::app {

namespace {

int dispatch(const RunOptions& options, std::ostream& out) {
  const LoadedConfig config = load_config(options.config, options.overrides);
  const auto it = config.doc.find("command");
  if (it == config.doc.end() || !it->is_string()) {
    throw ConfigError(options.config.string() + ": missing string key 'command'");
  }
  if (it->get<std::string>() != options.command) {
    throw ConfigError(options.config.string() + ": config is for '" + it->get<std::string>() +
                      "', not '" + options.command + "'");
  }

  std::uint64_t seed = 0;
  if (options.seed) {
    seed = *options.seed;
  } else if (config.doc.contains("seed")) {
    seed = get_count(config.doc, "seed");
  }
  if (options.workers == 0) throw ConfigError("--workers must be at least 1");
  if (options.out_dir.empty()) throw ConfigError("--out is required");

  const CommandContext ctx{config, options.out_dir, seed, options.sweep, options.workers, out};
  if (options.command == "chain") return cmd_chain(ctx);
  if (options.command == "noisecal") return cmd_noisecal(ctx);
  if (options.command == "readout") return cmd_readout(ctx);
  if (options.command == "budget") return cmd_budget(ctx);
  throw ConfigError("unknown command '" + options.command + "'");
}

}  // namespace

int run(const RunOptions& options, std::ostream& out) {
  try {
    return dispatch(options, out);
  } catch (const InputError& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  } catch (const nlohmann::ordered_json::exception& e) {
    spdlog::error("{}: {}", options.config.string(), e.what());
    return kExitInput;
  } catch (const NumericalError& e) {
    spdlog::error("{}", e.what());
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitNumerical;
  }
}

void configure_logging() {
  static const bool once = [] {
    auto logger = spdlog::stderr_color_mt("cryochain");
    logger->set_pattern("cryochain: %^%l%$: %v");
    spdlog::set_default_logger(logger);
    return true;
  }();
  (void)once;
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("CRYOCHAIN_LOG_LEVEL")) {
    level = spdlog::level::from_str(env);
  }
  spdlog::set_level(level);
}

int run_cli(int argc, char** argv) {
  configure_logging();

  CLI::App cli{"Cryogenic readout chain noise, calibration, readout fidelity and budget tool"};
  cli.set_version_flag("--version", "cryochain 0.1.0");
  cli.require_subcommand(1);

  RunOptions options;
  std::uint64_t seed = 0;
  std::string sweep;
  const struct {
    const char* name;
    const char* help;
  } commands[] = {
      {"chain", "Cascade noise and gain of a signal chain over a frequency grid"},
      {"noisecal", "Y-factor Te extraction and de-embedding from a measurement CSV"},
      {"readout", "Dispersive readout shot simulation and fidelity report"},
      {"budget", "Cryostat stage power and bias-line budget"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = cli.add_subcommand(c.name, c.help);
    sub->add_option("--config", options.config, "Run configuration (JSON)")->required();
    sub->add_option("--out", options.out_dir, "Output directory")->required();
    sub->add_option("--seed", seed, "Random seed (default: config 'seed' or 0)");
    sub->add_option("--sweep", sweep, "key=v1,v2,... evaluated one value at a time");
    sub->add_option("--set", options.overrides, "key=value config override (repeatable)");
    sub->add_option("--workers", options.workers, "Worker threads")
        ->check(CLI::PositiveNumber);
    subs.push_back(sub);
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  for (auto* sub : subs) {
    if (sub->parsed()) {
      options.command = sub->get_name();
      if (sub->count("--seed") > 0) options.seed = seed;
      if (sub->count("--sweep") > 0) options.sweep = sweep;
    }
  }
  return run(options, std::cout);
}

}  // namespace cryochain::app
