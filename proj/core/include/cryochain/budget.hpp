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

// Refrigerator power-budget planning and bias-topology power comparison.

#include <cstdint>
#include <string>
#include <vector>

namespace cryochain::budget {

struct StageSpec {
  std::string name = "4K";
  double temperature_k = 4.0;
  double cooling_power_w = 0.0;
  /// Share of the stage cooling power given to the amplifiers.
  double allocation_fraction = 1.0 / 3.0;

  void validate() const;
};

struct DeploymentSpec {
  std::uint64_t n_qubits = 0;
  std::uint64_t qubits_per_line = 1;
  double p_lna_w = 0.0;
  std::uint64_t bias_lines_per_lna = 1;

  void validate() const;
};

struct BudgetReport {
  std::uint64_t n_lines = 0;
  double total_power_w = 0.0;
  double budget_w = 0.0;
  /// total / budget.
  double utilization = 0.0;
  bool feasible = false;
  std::uint64_t total_bias_lines = 0;
};

/// One amplifier per ceil(n_qubits / qubits_per_line) readout lines.
BudgetReport plan_budget(const DeploymentSpec& deployment,
                         const StageSpec& stage);

enum class BiasKind { Direct, Multiplexed };

struct BiasStage {
  double v_drop = 0.0;
  double current_a = 0.0;
};

struct BiasTopology {
  BiasKind kind = BiasKind::Direct;
  std::vector<BiasStage> stages;
  double rail_v = 0.0;

  void validate() const;
};

struct BiasPower {
  double power_w = 0.0;
  std::vector<std::string> warnings;
};

/// Direct: every stage draws its current from the rail. Multiplexed: the
/// stages are stacked and share the largest stage current.
BiasPower bias_power(const BiasTopology& topology);

struct TopologyComparison {
  BiasPower direct;
  BiasPower multiplexed;
  /// direct / multiplexed.
  double reduction = 0.0;
};

TopologyComparison compare_topologies(const BiasTopology& direct,
                                      const BiasTopology& multiplexed);

}  // namespace cryochain::budget
