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

// Dispersive single-shot qubit readout: resonator response, IQ shot
// generation, blob alignment, SNR estimation and threshold assignment.
//
// IQ amplitudes are in sqrt(W) at the reference plane of ReadoutConfig.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cryochain::readout {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K

using Complex = std::complex<double>;

/// Single-pole transmission resonator. State |i> moves the resonance to
/// f_r + (2i - 1) chi.
class ResonatorModel {
 public:
  ResonatorModel(double f_r_hz, double kappa_hz, double chi_hz);

  double f_r() const noexcept { return f_r_; }
  double kappa() const noexcept { return kappa_; }
  double chi() const noexcept { return chi_; }
  double resonance(int state) const;

 private:
  double f_r_;
  double kappa_;
  double chi_;
};

struct ReadoutConfig {
  double probe_freq_hz = 0.0;
  double p_in_w = 0.0;
  double tau_s = 1e-6;
  /// System noise temperature referred to the same plane as p_in_w.
  double t_sys_k = 0.0;
  /// Probability an excited-state shot relaxes before integration.
  double decay_prob = 0.0;

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

struct IQPoint {
  double i = 0.0;
  double q = 0.0;
  int true_state = 0;

  bool operator==(const IQPoint&) const = default;
};

/// Sample statistics per state. Sigmas are taken along the unit vector
/// from c0 to c1 (the Q axis when the centers coincide).
struct BlobStats {
  Complex c0;
  Complex c1;
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  std::size_t n0 = 0;
  std::size_t n1 = 0;
};

class ShotSet {
 public:
  ShotSet() = default;
  /// Throws DomainError on non-finite components or labels outside {0,1}.
  explicit ShotSet(std::vector<IQPoint> shots);

  std::span<const IQPoint> shots() const noexcept { return shots_; }
  std::size_t size() const noexcept { return shots_.size(); }
  const BlobStats& stats() const noexcept { return stats_; }

  /// Rigid rotation of every point by `angle` radians.
  ShotSet rotated(double angle) const;
  /// Every coordinate multiplied by `factor`.
  ShotSet scaled(double factor) const;

 private:
  std::vector<IQPoint> shots_;
  BlobStats stats_;
};

Complex s21_dispersive(double frequency_hz, int state, const ResonatorModel& r);

/// Per-quadrature noise standard deviation, sqrt(k_B T_sys / (4 tau)).
double noise_sigma(const ReadoutConfig& cfg);

/// Blob centers c_i = S21(probe, i) sqrt(p_in).
std::pair<Complex, Complex> blob_centers(const ReadoutConfig& cfg,
                                         const ResonatorModel& r);

/// Model SNR |c1 - c0| / sqrt(2 sigma^2). Throws NumericalError when
/// T_sys = 0.
double snr_from_chain(const ReadoutConfig& cfg, const ResonatorModel& r);

/// Noise sigma that gives the requested model SNR for this configuration.
double sigma_for_snr(const ReadoutConfig& cfg, const ResonatorModel& r,
                     double snr);

struct ShotOptions {
  /// Replaces the radiometric sigma (e.g. 0 for noiseless shots).
  std::optional<double> sigma_override;
  /// Worker threads; the output does not depend on this.
  unsigned workers = 1;
};

/// 2 n_per_state shots, state 0 first. Shot k is a pure function of
/// (seed, k).
ShotSet simulate_shots(const ReadoutConfig& cfg, const ResonatorModel& r,
                       std::size_t n_per_state, std::uint64_t seed,
                       const ShotOptions& options = {});

struct Alignment {
  double angle = 0.0;
  ShotSet rotated;
};

/// Rotation that puts c1 - c0 on the +Q axis.
Alignment align_rotation(const ShotSet& shots);

/// Plug-in SNR on the aligned Q coordinate, sample means and sample
/// standard deviations.
double snr_estimate(const ShotSet& shots);

/// 1 - erfc(SNR / 2) / 2.
double fidelity_from_snr(double snr);

struct Confusion {
  double f0 = 0.0;
  double f1 = 0.0;
  double f_avg = 0.0;
  /// Midpoint of the state means on the aligned Q axis.
  double threshold = 0.0;
  double angle = 0.0;
  /// Assigned state per shot, same order as the input.
  std::vector<int> assigned;
};

Confusion classify_and_confusion(const ShotSet& shots);

struct HistogramBin {
  double center_q = 0.0;
  std::size_t count0 = 0;
  std::size_t count1 = 0;
};

/// Histogram of the Q coordinate of already aligned shots.
std::vector<HistogramBin> histogram_q(const ShotSet& aligned,
                                      std::size_t bins);

}  // namespace cryochain::readout
