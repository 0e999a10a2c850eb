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
#include "cryochain/noisecal.hpp"

#include <cmath>
#include <numbers>

#include "cryochain/error.hpp"
#include "cryochain/format.hpp"

namespace cryochain::noisecal {

namespace {

// Gains below this make the backend dominate the extracted DUT noise.
constexpr double kBackendDominatedGainDb = 10.0;

}  // namespace

double thot_from_enr(double enr_db) {
  if (std::isnan(enr_db)) throw DomainError("ENR is NaN");
  return rfnet::kT0 * (1.0 + std::pow(10.0, enr_db / 10.0));
}

NoiseSourceSpec::NoiseSourceSpec(double t_hot_k, double t_cold_k)
    : t_hot_(t_hot_k), t_cold_(t_cold_k) {
  if (!(t_cold_ >= 0.0) || !std::isfinite(t_cold_)) {
    throw DomainError("cold source temperature must be >= 0 K, got " +
                      format_sig(t_cold_));
  }
  if (!(t_hot_ > t_cold_) || !std::isfinite(t_hot_)) {
    throw DomainError("hot source temperature " + format_sig(t_hot_) +
                      " K must exceed cold temperature " + format_sig(t_cold_) +
                      " K");
  }
}

NoiseSourceSpec NoiseSourceSpec::from_temperatures(double t_hot_k,
                                                   double t_cold_k) {
  return NoiseSourceSpec(t_hot_k, t_cold_k);
}

NoiseSourceSpec NoiseSourceSpec::from_enr(double enr_db, double t_cold_k) {
  return NoiseSourceSpec(thot_from_enr(enr_db), t_cold_k);
}

NoiseMeasurement::NoiseMeasurement(NoiseSourceSpec source, double y,
                                   std::string plane)
    : source_(source), y_(y), plane_(std::move(plane)) {
  if (!(y_ > 0.0) || !std::isfinite(y_)) {
    throw DomainError("Y factor must be a finite positive ratio, got " +
                      format_sig(y_));
  }
}

NoiseMeasurement NoiseMeasurement::from_y(NoiseSourceSpec source, double y,
                                          std::string reference_plane) {
  return NoiseMeasurement(source, y, std::move(reference_plane));
}

NoiseMeasurement NoiseMeasurement::from_powers(NoiseSourceSpec source,
                                               double p_hot_w, double p_cold_w,
                                               std::string reference_plane) {
  if (!(p_hot_w > 0.0) || !(p_cold_w > 0.0) || !std::isfinite(p_hot_w) ||
      !std::isfinite(p_cold_w)) {
    throw DomainError("noise powers must be finite and > 0 W");
  }
  return NoiseMeasurement(source, p_hot_w / p_cold_w,
                          std::move(reference_plane));
}

double y_from_te(const NoiseSourceSpec& source, double te_k) {
  if (!(te_k >= 0.0)) {
    throw DomainError("noise temperature must be >= 0 K, got " +
                      format_sig(te_k));
  }
  return (source.t_hot() + te_k) / (source.t_cold() + te_k);
}

double y_factor_te(const NoiseMeasurement& m) {
  const double y = m.y();
  if (!(y > 1.0)) {
    throw NoExcessNoiseError(y, "no excess noise: Y = " + format_sig(y) +
                                    " <= 1");
  }
  const double te = (m.source().t_hot() - y * m.source().t_cold()) / (y - 1.0);
  if (te < 0.0) {
    throw NonphysicalMeasurementError(
        te, "nonphysical measurement: Te = " + format_sig(te) +
                " K (T_hot below Y T_cold)");
  }
  return te;
}

double cable_effective_te(double loss_db, double t_in_k, double t_out_k,
                          const rfnet::CableModel& model) {
  if (!(loss_db >= 0.0) || !std::isfinite(loss_db)) {
    throw DomainError("cable loss must be >= 0 dB, got " + format_sig(loss_db));
  }
  if (!(t_in_k >= 0.0) || !(t_out_k >= 0.0)) {
    throw DomainError("cable temperatures must be >= 0 K");
  }
  if (const auto* mid = std::get_if<rfnet::MidpointProfile>(&model)) {
    return rfnet::attenuator_te(loss_db, mid->t_mid_k);
  }

  const std::size_t n = std::get<rfnet::DistributedProfile>(model).segments;
  if (n < 1) throw DomainError("distributed cable needs at least one segment");

  // Each segment loses loss_db / n at the temperature of its centre. The
  // k-th segment sits behind k segments of loss, so its contribution is
  // multiplied by L_seg^k when referred to the cable input.
  const double seg_db = loss_db / static_cast<double>(n);
  const double seg_excess = std::expm1(seg_db * std::numbers::ln10 / 10.0);
  const double seg_loss = 1.0 + seg_excess;
  double referral = 1.0;
  double te = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    const double t = t_in_k + (t_out_k - t_in_k) * x;
    te += seg_excess * t * referral;
    referral *= seg_loss;
  }
  return te;
}

DeembedResult deembed_dut_te(double te_sys_k, double te_input_k,
                             double gain_input, double backend_te_k,
                             double dut_gain_db) {
  if (!(gain_input > 0.0) || !std::isfinite(gain_input)) {
    throw DomainError("input chain gain must be > 0, got " +
                      format_sig(gain_input));
  }
  if (!(backend_te_k >= 0.0)) {
    throw DomainError("backend noise temperature must be >= 0 K");
  }
  if (!std::isfinite(dut_gain_db)) throw DomainError("DUT gain must be finite");
  if (!std::isfinite(te_sys_k)) throw DomainError("system Te must be finite");

  const double g_dut = rfnet::db_to_linear(dut_gain_db);
  DeembedResult r;
  r.te_input_k = te_input_k;
  r.gain_input = gain_input;
  r.backend_term_k = backend_te_k / g_dut;
  r.backend_sensitivity = -1.0 / g_dut;
  r.te_dut_k = gain_input * (te_sys_k - te_input_k) - r.backend_term_k;

  if (r.te_dut_k < 0.0) {
    throw OvercorrectedDeembedError(r.te_dut_k, te_sys_k, te_input_k,
                                    gain_input, r.backend_term_k);
  }
  if (dut_gain_db < kBackendDominatedGainDb) {
    r.warnings.push_back("backend-dominated extraction: DUT gain " +
                         format_sig(dut_gain_db) + " dB < " +
                         format_sig(kBackendDominatedGainDb) + " dB");
  }
  if (gain_input > 1.0) {
    r.warnings.push_back("input chain has net gain (" +
                         format_sig(10.0 * std::log10(gain_input)) +
                         " dB); expected a lossy fixture");
  }
  return r;
}

DeembedResult deembed_dut_te(double te_sys_k, const DeembedContext& ctx,
                             double frequency_hz) {
  const rfnet::FrequencyGrid point({frequency_hz});
  const rfnet::ChainReport in = rfnet::cascade_noise(ctx.input_chain, point);
  return deembed_dut_te(te_sys_k, in.te_input_referred.front(),
                        in.cumulative_gain.front(),
                        ctx.backend_te_k, ctx.dut_gain_db);
}

}  // namespace cryochain::noisecal
