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
#include <gtest/gtest.h>

#include <random>

#include "cryochain/budget.hpp"
#include "cryochain/error.hpp"

namespace cryochain::budget {
namespace {

const StageSpec kFourKelvin{"4K", 4.0, 3.0, 1.0 / 3.0};

TEST(PlanBudget, ReferenceDeployment) {
  const auto r = plan_budget({1000, 10, 10e-3, 1}, kFourKelvin);
  EXPECT_EQ(r.n_lines, 100u);
  EXPECT_NEAR(r.total_power_w, 1.0, 1e-12);
  EXPECT_NEAR(r.budget_w, 1.0, 1e-12);
  EXPECT_NEAR(r.utilization, 1.0, 1e-12);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.total_bias_lines, 100u);
}

TEST(PlanBudget, MaximumBiasIsInfeasible) {
  const auto r = plan_budget({1000, 10, 31e-3, 1}, kFourKelvin);
  EXPECT_NEAR(r.total_power_w, 3.1, 1e-12);
  EXPECT_FALSE(r.feasible);
}

TEST(PlanBudget, ZeroPowerAlwaysFeasible) {
  const auto r = plan_budget({1000000, 1, 0.0, 1}, kFourKelvin);
  EXPECT_EQ(r.total_power_w, 0.0);
  EXPECT_TRUE(r.feasible);
}

TEST(PlanBudget, TwoBiasLinesPerAmplifier) {
  EXPECT_EQ(plan_budget({1000, 10, 10e-3, 2}, kFourKelvin).total_bias_lines, 200u);
}

TEST(PlanBudget, CeilingDivision) {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<std::uint64_t> q(1, 100000), per(1, 64);
  for (int k = 0; k < 10000; ++k) {
    const DeploymentSpec d{q(gen), per(gen), 1e-3, 1};
    const auto r = plan_budget(d, kFourKelvin);
    EXPECT_GE(r.n_lines * d.qubits_per_line, d.n_qubits);
    EXPECT_LT((r.n_lines - 1) * d.qubits_per_line, d.n_qubits);
  }
}

TEST(PlanBudget, MonotoneFeasibility) {
  std::mt19937_64 gen(2);
  std::uniform_int_distribution<std::uint64_t> q(1, 5000);
  std::uniform_real_distribution<double> p(0.0, 0.05), dp(0.0, 0.01);
  for (int k = 0; k < 10000; ++k) {
    const DeploymentSpec d{q(gen), 10, p(gen), 1};
    const auto base = plan_budget(d, kFourKelvin);
    const auto more_power = plan_budget({d.n_qubits, 10, d.p_lna_w + dp(gen), 1}, kFourKelvin);
    const auto more_qubits = plan_budget({d.n_qubits + 37, 10, d.p_lna_w, 1}, kFourKelvin);
    if (!base.feasible) {
      EXPECT_FALSE(more_power.feasible);
      EXPECT_FALSE(more_qubits.feasible);
    }
  }
}

TEST(PlanBudget, Validation) {
  EXPECT_THROW(plan_budget({0, 10, 1e-3, 1}, kFourKelvin), DomainError);
  EXPECT_THROW(plan_budget({10, 0, 1e-3, 1}, kFourKelvin), DomainError);
  EXPECT_THROW(plan_budget({10, 1, -1e-3, 1}, kFourKelvin), DomainError);
  EXPECT_THROW(plan_budget({10, 1, 1e-3, 1}, {"4K", 4.0, 0.0, 0.5}), DomainError);
  EXPECT_THROW(plan_budget({10, 1, 1e-3, 1}, {"4K", 4.0, 3.0, 1.5}), DomainError);
}

BiasTopology uniform(BiasKind kind, int n, double v, double i, double rail) {
  return {kind, std::vector<BiasStage>(n, {v, i}), rail};
}

TEST(BiasPower, SingleStageTopologiesAgree) {
  EXPECT_DOUBLE_EQ(bias_power(uniform(BiasKind::Direct, 1, 0.6, 15e-3, 3.4)).power_w,
                   bias_power(uniform(BiasKind::Multiplexed, 1, 0.6, 15e-3, 3.4)).power_w);
}

TEST(BiasPower, ThreeStageExample) {
  const auto d = bias_power(uniform(BiasKind::Direct, 3, 1.0, 15e-3, 3.4));
  const auto m = bias_power(uniform(BiasKind::Multiplexed, 3, 1.0, 15e-3, 3.4));
  EXPECT_NEAR(d.power_w, 0.153, 1e-15);
  EXPECT_NEAR(m.power_w, 0.051, 1e-15);
  EXPECT_NEAR(d.power_w / m.power_w, 3.0, 1e-12);
  EXPECT_TRUE(m.warnings.empty());
}

TEST(BiasPower, IdenticalStagesRatioIsStageCount) {
  for (int n = 1; n <= 8; ++n) {
    const auto c = compare_topologies(uniform(BiasKind::Direct, n, 0.5, 7e-3, 2.0),
                                      uniform(BiasKind::Multiplexed, n, 0.5, 7e-3, 2.0));
    EXPECT_NEAR(c.reduction, n, 1e-12 * n);
  }
}

TEST(BiasPower, MultiplexedNeverExceedsDirect) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> n(1, 6);
  std::uniform_real_distribution<double> v(0.0, 2.0), i(0.0, 0.03), rail(0.5, 5.0);
  for (int k = 0; k < 5000; ++k) {
    std::vector<BiasStage> stages(n(gen));
    for (auto& s : stages) s = {v(gen), i(gen)};
    const double r = rail(gen);
    const double d = bias_power({BiasKind::Direct, stages, r}).power_w;
    const double m = bias_power({BiasKind::Multiplexed, stages, r}).power_w;
    EXPECT_LE(m, d * (1.0 + 1e-15));
  }
}

TEST(BiasPower, MismatchAndOverdriveWarnings) {
  const BiasTopology t{BiasKind::Multiplexed, {{2.0, 15e-3}, {2.0, 10e-3}}, 3.0};
  const auto p = bias_power(t);
  EXPECT_NEAR(p.power_w, 3.0 * 15e-3, 1e-15);
  ASSERT_EQ(p.warnings.size(), 2u);
  EXPECT_NE(p.warnings[0].find("current mismatch"), std::string::npos);
  EXPECT_NE(p.warnings[1].find("exceed"), std::string::npos);
}

TEST(BiasPower, Validation) {
  EXPECT_THROW(bias_power({BiasKind::Direct, {}, 3.0}), DomainError);
  EXPECT_THROW(bias_power({BiasKind::Direct, {{-1.0, 0.01}}, 3.0}), DomainError);
  EXPECT_THROW(compare_topologies(uniform(BiasKind::Multiplexed, 1, 1, 1, 1),
                                  uniform(BiasKind::Direct, 1, 1, 1, 1)),
               DomainError);
}

}  // namespace
}  // namespace cryochain::budget
