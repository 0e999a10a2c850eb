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
#include "cryochain/budget.hpp"

#include <algorithm>
#include <cmath>

#include "cryochain/error.hpp"
#include "cryochain/format.hpp"

namespace cryochain::budget {

namespace {

// Relative slack on the feasibility comparison so that budgets built from
// decimal fractions (3 W x 1/3) compare equal to their nominal value.
constexpr double kFeasibilitySlack = 1e-12;

}  // namespace

void StageSpec::validate() const {
  if (!(cooling_power_w > 0.0) || !std::isfinite(cooling_power_w)) {
    throw DomainError("stage cooling power must be > 0 W");
  }
  if (!(allocation_fraction > 0.0 && allocation_fraction <= 1.0)) {
    throw DomainError("allocation fraction must lie in (0, 1], got " +
                      format_sig(allocation_fraction));
  }
  if (!(temperature_k >= 0.0)) {
    throw DomainError("stage temperature must be >= 0 K");
  }
}

void DeploymentSpec::validate() const {
  if (n_qubits == 0 || qubits_per_line == 0 || bias_lines_per_lna == 0) {
    throw DomainError("deployment counts must be positive");
  }
  if (!(p_lna_w >= 0.0) || !std::isfinite(p_lna_w)) {
    throw DomainError("per-LNA power must be >= 0 W");
  }
}

BudgetReport plan_budget(const DeploymentSpec& d, const StageSpec& s) {
  d.validate();
  s.validate();
  BudgetReport r;
  r.n_lines = (d.n_qubits + d.qubits_per_line - 1) / d.qubits_per_line;
  r.total_power_w = static_cast<double>(r.n_lines) * d.p_lna_w;
  r.budget_w = s.cooling_power_w * s.allocation_fraction;
  r.utilization = r.total_power_w / r.budget_w;
  r.feasible = r.total_power_w <= r.budget_w * (1.0 + kFeasibilitySlack);
  r.total_bias_lines = r.n_lines * d.bias_lines_per_lna;
  return r;
}

void BiasTopology::validate() const {
  if (stages.empty()) throw DomainError("bias topology has no stages");
  if (!(rail_v >= 0.0) || !std::isfinite(rail_v)) {
    throw DomainError("rail voltage must be >= 0 V");
  }
  for (const auto& st : stages) {
    if (!(st.v_drop >= 0.0) || !(st.current_a >= 0.0) ||
        !std::isfinite(st.v_drop) || !std::isfinite(st.current_a)) {
      throw DomainError("stage voltages and currents must be >= 0");
    }
  }
}

BiasPower bias_power(const BiasTopology& t) {
  t.validate();
  BiasPower p;
  if (t.kind == BiasKind::Direct) {
    double current = 0.0;
    for (const auto& st : t.stages) current += st.current_a;
    p.power_w = t.rail_v * current;
    return p;
  }

  const auto [lo, hi] = std::minmax_element(
      t.stages.begin(), t.stages.end(),
      [](const BiasStage& a, const BiasStage& b) {
        return a.current_a < b.current_a;
      });
  if (lo->current_a != hi->current_a) {
    p.warnings.push_back("current mismatch; largest stage current assumed (" +
                         format_sig(hi->current_a) + " A)");
  }
  double stacked = 0.0;
  for (const auto& st : t.stages) stacked += st.v_drop;
  if (stacked > t.rail_v) {
    p.warnings.push_back("stacked stage drops " + format_sig(stacked) +
                         " V exceed the rail " + format_sig(t.rail_v) + " V");
  }
  p.power_w = t.rail_v * hi->current_a;
  return p;
}

TopologyComparison compare_topologies(const BiasTopology& direct,
                                      const BiasTopology& multiplexed) {
  if (direct.kind != BiasKind::Direct ||
      multiplexed.kind != BiasKind::Multiplexed) {
    throw DomainError("compare_topologies expects (direct, multiplexed)");
  }
  TopologyComparison c{bias_power(direct), bias_power(multiplexed), 0.0};
  if (!(c.multiplexed.power_w > 0.0)) {
    throw NumericalError("multiplexed topology draws no power; ratio undefined");
  }
  c.reduction = c.direct.power_w / c.multiplexed.power_w;
  return c;
}

}  // namespace cryochain::budget
