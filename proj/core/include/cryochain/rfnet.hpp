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

// Two-port network algebra and cascaded noise-temperature budgets.
//
// Temperatures are physical kelvin, gains are power ratios unless a name
// says _db, and frequencies are Hz. Every type here is an immutable value
// once constructed; constructors enforce the documented invariants.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cryochain::rfnet {

/// Reference temperature for noise figure definitions.
inline constexpr double kT0 = 290.0;

using Complex = std::complex<double>;

class FrequencyGrid {
 public:
  /// Throws DomainError unless nonempty, strictly increasing and positive.
  explicit FrequencyGrid(std::vector<double> points_hz);

  /// `count` evenly spaced points from start to stop inclusive.
  static FrequencyGrid linspace(double start_hz, double stop_hz,
                                std::size_t count);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  double front() const noexcept { return points_.front(); }
  double back() const noexcept { return points_.back(); }

  bool operator==(const FrequencyGrid&) const = default;

 private:
  std::vector<double> points_;
};

/// 2x2 scattering matrix at one frequency.
struct SMatrix {
  Complex s11;
  Complex s12;
  Complex s21;
  Complex s22;

  bool operator==(const SMatrix&) const = default;
};

class TwoPortRecord {
 public:
  /// Throws DomainError on size mismatch, non-finite entries or z_ref <= 0.
  TwoPortRecord(FrequencyGrid grid, std::vector<SMatrix> s,
                double z_ref_ohm = 50.0);

  const FrequencyGrid& grid() const noexcept { return grid_; }
  std::span<const SMatrix> s() const noexcept { return s_; }
  const SMatrix& operator[](std::size_t i) const { return s_[i]; }
  std::size_t size() const noexcept { return s_.size(); }
  double z_ref() const noexcept { return z_ref_; }

  /// |S21|*|S12| <= 1 at every point.
  bool is_passive(double tolerance = 1e-12) const;
  /// Throws DomainError naming the first non-passive frequency.
  void require_passive(double tolerance = 1e-12) const;

 private:
  FrequencyGrid grid_;
  std::vector<SMatrix> s_;
  double z_ref_;
};

// ---------------------------------------------------------------------------
// Scalar conversions

/// IEEE noise temperature of a noise figure, T0 (10^(NF/10) - 1).
double te_from_nf(double nf_db);
double nf_from_te(double te_k);

/// Input-referred noise temperature of a matched attenuator at t_phys.
double attenuator_te(double loss_db, double t_phys_k);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// ---------------------------------------------------------------------------
// Network operations

/// Composite of `a` followed by `b` via transfer (T) matrices.
/// Grids and reference impedances must match exactly.
TwoPortRecord cascade_sparams(const TwoPortRecord& a, const TwoPortRecord& b);

/// Linear interpolation in magnitude and unwrapped phase, per S entry.
/// Throws ExtrapolationError when `grid` leaves the record's span.
TwoPortRecord resample(const TwoPortRecord& record, const FrequencyGrid& grid);

// ---------------------------------------------------------------------------
// Chain elements

struct Attenuator {
  double loss_db = 0.0;
  double t_phys_k = 0.0;
};

struct Amplifier {
  /// Scalar gain in dB, or a measured record whose |S21|^2 is the gain.
  std::variant<double, TwoPortRecord> gain;
  double te_k = 0.0;
};

/// Cable noise taken as (L - 1) t_mid with a user-estimated midpoint
/// temperature.
struct MidpointProfile {
  double t_mid_k = 0.0;
};

/// Cable split into equal-dB segments with temperature linear in position.
struct DistributedProfile {
  std::size_t segments = 64;
};

using CableModel = std::variant<MidpointProfile, DistributedProfile>;

struct Cable {
  double loss_db = 0.0;
  double t_in_k = 0.0;
  double t_out_k = 0.0;
  CableModel model = DistributedProfile{};
};

/// Noise temperature sampled on its own grid, interpolated linearly and
/// never extrapolated.
class TabulatedTe {
 public:
  TabulatedTe(FrequencyGrid grid, std::vector<double> te_k);
  const FrequencyGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return te_; }
  double at(double frequency_hz) const;

 private:
  FrequencyGrid grid_;
  std::vector<double> te_;
};

/// Element described by a measured S-parameter block.
struct SParamBlock {
  TwoPortRecord record;
  std::variant<double, TabulatedTe> te_k;
};

class ChainElement {
 public:
  using Kind = std::variant<Attenuator, Amplifier, Cable, SParamBlock>;

  /// Throws DomainError on negative loss or temperature.
  ChainElement(std::string label, Kind kind);

  const std::string& label() const noexcept { return label_; }
  const Kind& kind() const noexcept { return kind_; }

 private:
  std::string label_;
  Kind kind_;
};

/// Per-frequency linear gain and input-referred noise temperature of one
/// element.
struct ElementResponse {
  std::vector<double> gain;
  std::vector<double> te_k;
};

ElementResponse evaluate(const ChainElement& element,
                         const FrequencyGrid& grid);

/// Ordered cascade, input first.
class SignalChain {
 public:
  explicit SignalChain(std::vector<ChainElement> elements);

  std::span<const ChainElement> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  std::vector<ChainElement> elements_;
};

struct ChainReport {
  FrequencyGrid grid;
  std::vector<std::string> labels;
  std::vector<double> cumulative_gain;
  std::vector<double> cumulative_gain_db;
  std::vector<double> te_input_referred;
  /// per_element_contribution[element][frequency], kelvin at the input.
  std::vector<std::vector<double>> per_element_contribution;
};

/// Friis cascade of the chain at every grid point, referred to the chain
/// input. Throws InfiniteReferredNoiseError on a zero-gain element.
ChainReport cascade_noise(const SignalChain& chain, const FrequencyGrid& grid);

}  // namespace cryochain::rfnet
