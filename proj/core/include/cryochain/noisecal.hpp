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

// Noise-temperature extraction for cold-attenuator Y-factor measurements:
// hot/cold source handling, gradient-cable noise and de-embedding of the
// input fixture chain and backend.

#include <optional>
#include <string>
#include <vector>

#include "cryochain/rfnet.hpp"

namespace cryochain::noisecal {

/// Hot temperature of a source with the given excess noise ratio.
double thot_from_enr(double enr_db);

class NoiseSourceSpec {
 public:
  /// Throws DomainError unless t_hot > t_cold >= 0.
  static NoiseSourceSpec from_temperatures(double t_hot_k, double t_cold_k);
  static NoiseSourceSpec from_enr(double enr_db, double t_cold_k = rfnet::kT0);

  double t_hot() const noexcept { return t_hot_; }
  double t_cold() const noexcept { return t_cold_; }

 private:
  NoiseSourceSpec(double t_hot_k, double t_cold_k);
  double t_hot_;
  double t_cold_;
};

class NoiseMeasurement {
 public:
  /// y is P_hot / P_cold. Throws DomainError when y is not finite or <= 0;
  /// y <= 1 is accepted here and rejected by y_factor_te.
  static NoiseMeasurement from_y(NoiseSourceSpec source, double y,
                                 std::string reference_plane = "source");
  /// Raw powers in watts, reduced to Y immediately.
  static NoiseMeasurement from_powers(NoiseSourceSpec source, double p_hot_w,
                                      double p_cold_w,
                                      std::string reference_plane = "source");

  const NoiseSourceSpec& source() const noexcept { return source_; }
  double y() const noexcept { return y_; }
  const std::string& reference_plane() const noexcept { return plane_; }

 private:
  NoiseMeasurement(NoiseSourceSpec source, double y, std::string plane);
  NoiseSourceSpec source_;
  double y_;
  std::string plane_;
};

/// Forward model: Y = (T_hot + Te) / (T_cold + Te).
double y_from_te(const NoiseSourceSpec& source, double te_k);

/// System noise temperature at the measurement plane,
/// (T_hot - Y T_cold) / (Y - 1).
double y_factor_te(const NoiseMeasurement& m);

/// Input-referred noise of a lossy cable between two thermal stages.
double cable_effective_te(double loss_db, double t_in_k, double t_out_k,
                          const rfnet::CableModel& model);

struct DeembedContext {
  rfnet::SignalChain input_chain;
  double backend_te_k = 0.0;
  double dut_gain_db = 0.0;
};

struct DeembedResult {
  double te_dut_k = 0.0;
  double te_input_k = 0.0;
  double gain_input = 1.0;
  /// backend_te / G_dut, the term subtracted after input referral.
  double backend_term_k = 0.0;
  /// dTe_dut / dTe_backend = -1 / G_dut.
  double backend_sensitivity = 0.0;
  std::vector<std::string> warnings;
};

/// Solves Te_sys = Te_in + Te_dut / G_in + Te_backend / (G_in G_dut) for
/// Te_dut at one frequency. Throws OvercorrectedDeembedError when the
/// result is negative.
DeembedResult deembed_dut_te(double te_sys_k, const DeembedContext& ctx,
                             double frequency_hz);

/// Same solve with the input-chain response already evaluated.
DeembedResult deembed_dut_te(double te_sys_k, double te_input_k,
                             double gain_input, double backend_te_k,
                             double dut_gain_db);

}  // namespace cryochain::noisecal
