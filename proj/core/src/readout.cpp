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
#include "cryochain/readout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "cryochain/error.hpp"
#include "cryochain/format.hpp"
#include "cryochain/rng.hpp"

namespace cryochain::readout {

namespace {

constexpr std::uint32_t kNoiseLane = 0;
constexpr std::uint32_t kDecayLane = 1;

BlobStats compute_stats(std::span<const IQPoint> shots) {
  BlobStats s;
  Complex sum0, sum1;
  for (const auto& p : shots) {
    if (p.true_state == 0) {
      sum0 += Complex(p.i, p.q);
      ++s.n0;
    } else {
      sum1 += Complex(p.i, p.q);
      ++s.n1;
    }
  }
  if (s.n0) s.c0 = sum0 / static_cast<double>(s.n0);
  if (s.n1) s.c1 = sum1 / static_cast<double>(s.n1);

  Complex axis = s.c1 - s.c0;
  axis = std::abs(axis) > 0.0 ? axis / std::abs(axis) : Complex(0.0, 1.0);
  double ss0 = 0.0, ss1 = 0.0;
  for (const auto& p : shots) {
    const Complex d = Complex(p.i, p.q) - (p.true_state ? s.c1 : s.c0);
    const double along = (d * std::conj(axis)).real();
    (p.true_state ? ss1 : ss0) += along * along;
  }
  if (s.n0 >= 2) s.sigma0 = std::sqrt(ss0 / static_cast<double>(s.n0 - 1));
  if (s.n1 >= 2) s.sigma1 = std::sqrt(ss1 / static_cast<double>(s.n1 - 1));
  return s;
}

void require_both_states(const BlobStats& s) {
  if (s.n0 == 0 || s.n1 == 0) {
    throw InputError("shot set needs both states (have " +
                     std::to_string(s.n0) + " ground, " + std::to_string(s.n1) +
                     " excited)");
  }
}

}  // namespace

ResonatorModel::ResonatorModel(double f_r_hz, double kappa_hz, double chi_hz)
    : f_r_(f_r_hz), kappa_(kappa_hz), chi_(chi_hz) {
  if (!(f_r_ > 0.0) || !std::isfinite(f_r_)) {
    throw DomainError("resonator frequency must be > 0 Hz");
  }
  if (!(kappa_ > 0.0) || !std::isfinite(kappa_)) {
    throw DomainError("resonator linewidth must be > 0 Hz");
  }
  if (!std::isfinite(chi_)) throw DomainError("dispersive shift must be finite");
}

double ResonatorModel::resonance(int state) const {
  if (state != 0 && state != 1) {
    throw DomainError("qubit state must be 0 or 1, got " +
                      std::to_string(state));
  }
  return f_r_ + (2.0 * state - 1.0) * chi_;
}

void ReadoutConfig::validate() const {
  if (!(probe_freq_hz > 0.0) || !std::isfinite(probe_freq_hz)) {
    throw DomainError("probe frequency must be > 0 Hz");
  }
  if (!(p_in_w >= 0.0) || !std::isfinite(p_in_w)) {
    throw DomainError("probe power must be >= 0 W");
  }
  if (!(tau_s > 0.0) || !std::isfinite(tau_s)) {
    throw DomainError("integration time must be > 0 s");
  }
  if (!(t_sys_k >= 0.0) || !std::isfinite(t_sys_k)) {
    throw DomainError("system noise temperature must be >= 0 K");
  }
  if (!(decay_prob >= 0.0 && decay_prob <= 1.0)) {
    throw DomainError("decay probability must lie in [0, 1]");
  }
}

ShotSet::ShotSet(std::vector<IQPoint> shots) : shots_(std::move(shots)) {
  for (const auto& p : shots_) {
    if (!std::isfinite(p.i) || !std::isfinite(p.q)) {
      throw DomainError("IQ point has non-finite component");
    }
    if (p.true_state != 0 && p.true_state != 1) {
      throw DomainError("IQ point label must be 0 or 1");
    }
  }
  stats_ = compute_stats(shots_);
}

ShotSet ShotSet::rotated(double angle) const {
  const Complex turn = std::polar(1.0, angle);
  std::vector<IQPoint> out(shots_.size());
  std::transform(shots_.begin(), shots_.end(), out.begin(),
                 [&](const IQPoint& p) {
                   const Complex z = Complex(p.i, p.q) * turn;
                   return IQPoint{z.real(), z.imag(), p.true_state};
                 });
  return ShotSet(std::move(out));
}

ShotSet ShotSet::scaled(double factor) const {
  std::vector<IQPoint> out(shots_.size());
  std::transform(shots_.begin(), shots_.end(), out.begin(),
                 [&](const IQPoint& p) {
                   return IQPoint{p.i * factor, p.q * factor, p.true_state};
                 });
  return ShotSet(std::move(out));
}

Complex s21_dispersive(double frequency_hz, int state,
                       const ResonatorModel& r) {
  const double half_width = 0.5 * r.kappa();
  const double detuning = frequency_hz - r.resonance(state);
  return half_width / Complex(half_width, -detuning);
}

double noise_sigma(const ReadoutConfig& cfg) {
  cfg.validate();
  return std::sqrt(kBoltzmann * cfg.t_sys_k / (4.0 * cfg.tau_s));
}

std::pair<Complex, Complex> blob_centers(const ReadoutConfig& cfg,
                                         const ResonatorModel& r) {
  cfg.validate();
  const double amp = std::sqrt(cfg.p_in_w);
  return {s21_dispersive(cfg.probe_freq_hz, 0, r) * amp,
          s21_dispersive(cfg.probe_freq_hz, 1, r) * amp};
}

double snr_from_chain(const ReadoutConfig& cfg, const ResonatorModel& r) {
  const auto [c0, c1] = blob_centers(cfg, r);
  if (cfg.t_sys_k == 0.0) {
    throw NumericalError(
        "infinite SNR: T_sys = 0 K leaves the classical noise model");
  }
  const double sigma = noise_sigma(cfg);
  return std::abs(c1 - c0) / std::sqrt(2.0 * sigma * sigma);
}

double sigma_for_snr(const ReadoutConfig& cfg, const ResonatorModel& r,
                     double snr) {
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw DomainError("target SNR must be > 0, got " + format_sig(snr));
  }
  const auto [c0, c1] = blob_centers(cfg, r);
  const double contrast = std::abs(c1 - c0);
  if (contrast == 0.0) {
    throw DegenerateBlobsError(
        "degenerate blobs: zero contrast cannot reach a target SNR");
  }
  return contrast / (std::numbers::sqrt2 * snr);
}

ShotSet simulate_shots(const ReadoutConfig& cfg, const ResonatorModel& r,
                       std::size_t n_per_state, std::uint64_t seed,
                       const ShotOptions& options) {
  if (n_per_state < 1) throw DomainError("need at least one shot per state");
  cfg.validate();
  const auto [c0, c1] = blob_centers(cfg, r);
  const double sigma =
      options.sigma_override ? *options.sigma_override : noise_sigma(cfg);
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw DomainError("noise sigma must be finite and >= 0");
  }

  const rng::CounterRng gen(seed);
  const std::size_t total = 2 * n_per_state;
  std::vector<IQPoint> shots(total);

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const int state = k < n_per_state ? 0 : 1;
      Complex center = state ? c1 : c0;
      if (state == 1 && cfg.decay_prob > 0.0 &&
          gen.uniforms(k, kDecayLane)[0] < cfg.decay_prob) {
        center = c0;
      }
      const auto [n_i, n_q] = gen.normals(k, kNoiseLane);
      shots[k] = {center.real() + sigma * n_i, center.imag() + sigma * n_q,
                  state};
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.workers,
                                       static_cast<unsigned>(total)));
  if (workers == 1) {
    fill(0, total);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(total, w * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back(fill, begin, end);
    }
  }
  return ShotSet(std::move(shots));
}

Alignment align_rotation(const ShotSet& shots) {
  const BlobStats& s = shots.stats();
  require_both_states(s);
  const Complex d = s.c1 - s.c0;
  if (!(std::abs(d) > 0.0)) {
    throw DegenerateBlobsError("degenerate blobs: state centers coincide");
  }
  // Turn the separation vector onto +Q (argument pi/2).
  const double angle =
      std::remainder(std::numbers::pi / 2.0 - std::arg(d), 2.0 * std::numbers::pi);
  return {angle, shots.rotated(angle)};
}

double snr_estimate(const ShotSet& shots) {
  const BlobStats& s = shots.stats();
  require_both_states(s);
  if (s.n0 < 2 || s.n1 < 2) {
    throw InputError("SNR estimate needs at least two shots per state");
  }
  if (!(std::abs(s.c1 - s.c0) > 0.0)) return 0.0;

  const ShotSet aligned = align_rotation(shots).rotated;
  double sum0 = 0.0, sum1 = 0.0;
  for (const auto& p : aligned.shots()) (p.true_state ? sum1 : sum0) += p.q;
  const double m0 = sum0 / static_cast<double>(s.n0);
  const double m1 = sum1 / static_cast<double>(s.n1);
  double ss0 = 0.0, ss1 = 0.0;
  for (const auto& p : aligned.shots()) {
    const double d = p.q - (p.true_state ? m1 : m0);
    (p.true_state ? ss1 : ss0) += d * d;
  }
  const double var0 = ss0 / static_cast<double>(s.n0 - 1);
  const double var1 = ss1 / static_cast<double>(s.n1 - 1);
  if (!(var0 + var1 > 0.0)) {
    throw NumericalError("SNR undefined: both blobs have zero spread");
  }
  return std::abs(m1 - m0) / std::sqrt(var0 + var1);
}

double fidelity_from_snr(double snr) {
  if (!(snr >= 0.0)) {
    throw DomainError("SNR must be >= 0, got " + format_sig(snr));
  }
  return 1.0 - 0.5 * std::erfc(0.5 * snr);
}

Confusion classify_and_confusion(const ShotSet& shots) {
  const auto [angle, aligned] = align_rotation(shots);
  const BlobStats& s = aligned.stats();

  Confusion c;
  c.angle = angle;
  c.threshold = 0.5 * (s.c0.imag() + s.c1.imag());
  c.assigned.resize(aligned.size());
  std::size_t correct0 = 0, correct1 = 0;
  const auto pts = aligned.shots();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const int assigned = pts[k].q > c.threshold ? 1 : 0;
    c.assigned[k] = assigned;
    if (assigned == pts[k].true_state) (assigned ? correct1 : correct0) += 1;
  }
  c.f0 = static_cast<double>(correct0) / static_cast<double>(s.n0);
  c.f1 = static_cast<double>(correct1) / static_cast<double>(s.n1);
  c.f_avg = 0.5 * (c.f0 + c.f1);
  return c;
}

std::vector<HistogramBin> histogram_q(const ShotSet& aligned,
                                      std::size_t bins) {
  if (bins < 1) throw DomainError("histogram needs at least one bin");
  std::vector<HistogramBin> out(bins);
  if (aligned.size() == 0) return out;

  const auto pts = aligned.shots();
  const auto [lo_it, hi_it] = std::minmax_element(
      pts.begin(), pts.end(),
      [](const IQPoint& a, const IQPoint& b) { return a.q < b.q; });
  const double lo = lo_it->q;
  const double hi = hi_it->q;
  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
  const double origin = hi > lo ? lo : lo - 0.5 * width * static_cast<double>(bins);

  for (std::size_t b = 0; b < bins; ++b) {
    out[b].center_q = origin + (static_cast<double>(b) + 0.5) * width;
  }
  for (const auto& p : pts) {
    auto b = static_cast<std::size_t>((p.q - origin) / width);
    b = std::min(b, bins - 1);
    (p.true_state ? out[b].count1 : out[b].count0) += 1;
  }
  return out;
}

}  // namespace cryochain::readout
