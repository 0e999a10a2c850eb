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
#include "cryochain/rfnet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cryochain/error.hpp"
#include "cryochain/format.hpp"
#include "cryochain/noisecal.hpp"

namespace cryochain::rfnet {

namespace {

// Slack for grid endpoints that went through a unit conversion.
constexpr double kSpanSlack = 1e-12;

void require_temperature(double t, const char* what) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(what) + " must be a finite temperature >= 0 K, got " +
                      format_sig(t));
  }
}

void require_loss(double loss_db) {
  if (!(loss_db >= 0.0) || !std::isfinite(loss_db)) {
    throw DomainError("loss must be finite and >= 0 dB, got " +
                      format_sig(loss_db));
  }
}

bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Transfer matrix with [b1, a1]^T = T [a2, b2]^T.
struct TMatrix {
  Complex t11, t12, t21, t22;
};

TMatrix to_t(const SMatrix& s, double frequency_hz) {
  if (s.s21 == Complex{}) {
    throw SingularNetworkError(frequency_hz,
                               "singular T conversion: S21 = 0");
  }
  const Complex det = s.s11 * s.s22 - s.s12 * s.s21;
  return {-det / s.s21, s.s11 / s.s21, -s.s22 / s.s21, 1.0 / s.s21};
}

SMatrix to_s(const TMatrix& t, double frequency_hz) {
  if (t.t22 == Complex{}) {
    throw SingularNetworkError(frequency_hz,
                               "singular S conversion: T22 = 0");
  }
  const Complex det = t.t11 * t.t22 - t.t12 * t.t21;
  return {t.t12 / t.t22, det / t.t22, 1.0 / t.t22, -t.t21 / t.t22};
}

TMatrix multiply(const TMatrix& a, const TMatrix& b) {
  return {a.t11 * b.t11 + a.t12 * b.t21, a.t11 * b.t12 + a.t12 * b.t22,
          a.t21 * b.t11 + a.t22 * b.t21, a.t21 * b.t12 + a.t22 * b.t22};
}

Complex& entry(SMatrix& m, int k) {
  switch (k) {
    case 0: return m.s11;
    case 1: return m.s12;
    case 2: return m.s21;
    default: return m.s22;
  }
}

Complex entry(const SMatrix& m, int k) {
  switch (k) {
    case 0: return m.s11;
    case 1: return m.s12;
    case 2: return m.s21;
    default: return m.s22;
  }
}

// Index of the interval [i, i+1] holding f, plus the fractional position.
// Assumes f already clamped into the span.
std::pair<std::size_t, double> locate(std::span<const double> xs, double f) {
  if (xs.size() == 1) return {0, 0.0};
  auto it = std::upper_bound(xs.begin(), xs.end(), f);
  std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  hi = std::clamp<std::size_t>(hi, 1, xs.size() - 1);
  const std::size_t lo = hi - 1;
  const double w = (f - xs[lo]) / (xs[hi] - xs[lo]);
  return {lo, std::clamp(w, 0.0, 1.0)};
}

// Snaps target points onto the source span, collecting any that fall
// outside it.
std::vector<double> clamp_to_span(const FrequencyGrid& source,
                                  const FrequencyGrid& target) {
  const double lo = source.front();
  const double hi = source.back();
  std::vector<double> clamped;
  clamped.reserve(target.size());
  std::vector<double> outside;
  for (double f : target.points()) {
    if (f < lo * (1.0 - kSpanSlack) || f > hi * (1.0 + kSpanSlack)) {
      outside.push_back(f);
    }
    clamped.push_back(std::clamp(f, lo, hi));
  }
  if (!outside.empty()) {
    std::string list;
    const std::size_t shown = std::min<std::size_t>(outside.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
      if (i) list += ", ";
      list += format_sig(outside[i]);
    }
    if (outside.size() > shown) {
      list += ", ... (" + std::to_string(outside.size()) + " total)";
    }
    throw ExtrapolationError("extrapolation outside [" + format_sig(lo) +
                             ", " + format_sig(hi) + "] Hz requested at: " +
                             list);
  }
  return clamped;
}

}  // namespace

// ---------------------------------------------------------------------------

FrequencyGrid::FrequencyGrid(std::vector<double> points_hz)
    : points_(std::move(points_hz)) {
  if (points_.empty()) throw DomainError("frequency grid is empty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double f = points_[i];
    if (!std::isfinite(f) || f <= 0.0) {
      throw DomainError("frequency grid point " + std::to_string(i) +
                        " must be finite and > 0, got " + format_sig(f));
    }
    if (i > 0 && !(f > points_[i - 1])) {
      throw DomainError("frequency grid not strictly increasing at point " +
                        std::to_string(i) + " (" + format_sig(f) + " Hz)");
    }
  }
}

FrequencyGrid FrequencyGrid::linspace(double start_hz, double stop_hz,
                                      std::size_t count) {
  if (count == 0) throw DomainError("linspace needs at least one point");
  if (count == 1) return FrequencyGrid({start_hz});
  std::vector<double> pts(count);
  const double step = (stop_hz - start_hz) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = start_hz + step * static_cast<double>(i);
  }
  pts.back() = stop_hz;
  return FrequencyGrid(std::move(pts));
}

TwoPortRecord::TwoPortRecord(FrequencyGrid grid, std::vector<SMatrix> s,
                             double z_ref_ohm)
    : grid_(std::move(grid)), s_(std::move(s)), z_ref_(z_ref_ohm) {
  if (s_.size() != grid_.size()) {
    throw DomainError("two-port record has " + std::to_string(s_.size()) +
                      " matrices for " + std::to_string(grid_.size()) +
                      " frequencies");
  }
  if (!(z_ref_ > 0.0) || !std::isfinite(z_ref_)) {
    throw DomainError("reference impedance must be > 0 ohm, got " +
                      format_sig(z_ref_));
  }
  for (std::size_t i = 0; i < s_.size(); ++i) {
    const auto& m = s_[i];
    if (!finite(m.s11) || !finite(m.s12) || !finite(m.s21) || !finite(m.s22)) {
      throw DomainError("non-finite S-parameter at " + format_sig(grid_[i]) +
                        " Hz");
    }
  }
}

bool TwoPortRecord::is_passive(double tolerance) const {
  return std::all_of(s_.begin(), s_.end(), [&](const SMatrix& m) {
    return std::abs(m.s21) * std::abs(m.s12) <= 1.0 + tolerance;
  });
}

void TwoPortRecord::require_passive(double tolerance) const {
  for (std::size_t i = 0; i < s_.size(); ++i) {
    const double p = std::abs(s_[i].s21) * std::abs(s_[i].s12);
    if (p > 1.0 + tolerance) {
      throw DomainError("record declared passive has |S21||S12| = " +
                        format_sig(p) + " > 1 at " + format_sig(grid_[i]) +
                        " Hz");
    }
  }
}

// ---------------------------------------------------------------------------

double te_from_nf(double nf_db) {
  if (!(nf_db >= 0.0)) {
    throw DomainError("noise figure must be >= 0 dB, got " + format_sig(nf_db));
  }
  return kT0 * std::expm1(nf_db * std::numbers::ln10 / 10.0);
}

double nf_from_te(double te_k) {
  if (!(te_k >= 0.0)) {
    throw DomainError("noise temperature must be >= 0 K, got " +
                      format_sig(te_k));
  }
  return 10.0 * std::log1p(te_k / kT0) / std::numbers::ln10;
}

double attenuator_te(double loss_db, double t_phys_k) {
  require_loss(loss_db);
  require_temperature(t_phys_k, "attenuator temperature");
  return std::expm1(loss_db * std::numbers::ln10 / 10.0) * t_phys_k;
}

// ---------------------------------------------------------------------------

TwoPortRecord cascade_sparams(const TwoPortRecord& a, const TwoPortRecord& b) {
  if (!(a.grid() == b.grid())) {
    throw InputError("cascade_sparams: frequency grids differ (resample first)");
  }
  if (a.z_ref() != b.z_ref()) {
    throw InputError("cascade_sparams: reference impedances differ (" +
                     format_sig(a.z_ref()) + " vs " + format_sig(b.z_ref()) +
                     " ohm)");
  }
  std::vector<SMatrix> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double f = a.grid()[i];
    out.push_back(to_s(multiply(to_t(a[i], f), to_t(b[i], f)), f));
  }
  return TwoPortRecord(a.grid(), std::move(out), a.z_ref());
}

TwoPortRecord resample(const TwoPortRecord& record, const FrequencyGrid& grid) {
  if (record.grid() == grid) return record;
  const std::vector<double> targets = clamp_to_span(record.grid(), grid);

  const auto xs = record.grid().points();
  const std::size_t n = record.size();
  std::array<std::vector<double>, 4> mag;
  std::array<std::vector<double>, 4> phase;
  for (int k = 0; k < 4; ++k) {
    mag[k].resize(n);
    phase[k].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex z = entry(record[i], k);
      mag[k][i] = std::abs(z);
      double p = std::arg(z);
      if (i > 0) {
        const double step = std::remainder(p - phase[k][i - 1],
                                           2.0 * std::numbers::pi);
        p = phase[k][i - 1] + step;
      }
      phase[k][i] = p;
    }
  }

  std::vector<SMatrix> out(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const auto [lo, w] = locate(xs, targets[j]);
    const std::size_t hi = std::min(lo + 1, n - 1);
    for (int k = 0; k < 4; ++k) {
      const double m = (1.0 - w) * mag[k][lo] + w * mag[k][hi];
      const double p = (1.0 - w) * phase[k][lo] + w * phase[k][hi];
      entry(out[j], k) = std::polar(m, p);
    }
  }
  return TwoPortRecord(grid, std::move(out), record.z_ref());
}

// ---------------------------------------------------------------------------

TabulatedTe::TabulatedTe(FrequencyGrid grid, std::vector<double> te_k)
    : grid_(std::move(grid)), te_(std::move(te_k)) {
  if (te_.size() != grid_.size()) {
    throw DomainError("tabulated noise temperature size mismatch");
  }
  for (double t : te_) require_temperature(t, "tabulated noise temperature");
}

double TabulatedTe::at(double frequency_hz) const {
  const auto targets = clamp_to_span(grid_, FrequencyGrid({frequency_hz}));
  const auto [lo, w] = locate(grid_.points(), targets.front());
  const std::size_t hi = std::min(lo + 1, te_.size() - 1);
  return (1.0 - w) * te_[lo] + w * te_[hi];
}

ChainElement::ChainElement(std::string label, Kind kind)
    : label_(std::move(label)), kind_(std::move(kind)) {
  std::visit(
      [](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, Attenuator>) {
          require_loss(e.loss_db);
          require_temperature(e.t_phys_k, "attenuator temperature");
        } else if constexpr (std::is_same_v<T, Amplifier>) {
          require_temperature(e.te_k, "amplifier noise temperature");
          if (const double* g = std::get_if<double>(&e.gain);
              g && !std::isfinite(*g)) {
            throw DomainError("amplifier gain must be finite");
          }
        } else if constexpr (std::is_same_v<T, Cable>) {
          require_loss(e.loss_db);
          require_temperature(e.t_in_k, "cable input temperature");
          require_temperature(e.t_out_k, "cable output temperature");
          if (const auto* mid = std::get_if<MidpointProfile>(&e.model)) {
            require_temperature(mid->t_mid_k, "cable midpoint temperature");
          } else if (std::get<DistributedProfile>(e.model).segments < 1) {
            throw DomainError("distributed cable needs at least one segment");
          }
        } else {
          if (const double* t = std::get_if<double>(&e.te_k)) {
            require_temperature(*t, "element noise temperature");
          }
        }
      },
      kind_);
}

ElementResponse evaluate(const ChainElement& element,
                         const FrequencyGrid& grid) {
  const std::size_t n = grid.size();
  ElementResponse r{std::vector<double>(n), std::vector<double>(n)};

  auto gain_from_record = [&](const TwoPortRecord& rec) {
    const TwoPortRecord on_grid = resample(rec, grid);
    for (std::size_t i = 0; i < n; ++i) r.gain[i] = std::norm(on_grid[i].s21);
  };

  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, Attenuator>) {
          std::fill(r.gain.begin(), r.gain.end(), 1.0 / db_to_linear(e.loss_db));
          std::fill(r.te_k.begin(), r.te_k.end(),
                    attenuator_te(e.loss_db, e.t_phys_k));
        } else if constexpr (std::is_same_v<T, Amplifier>) {
          if (const double* g = std::get_if<double>(&e.gain)) {
            std::fill(r.gain.begin(), r.gain.end(), db_to_linear(*g));
          } else {
            gain_from_record(std::get<TwoPortRecord>(e.gain));
          }
          std::fill(r.te_k.begin(), r.te_k.end(), e.te_k);
        } else if constexpr (std::is_same_v<T, Cable>) {
          std::fill(r.gain.begin(), r.gain.end(), 1.0 / db_to_linear(e.loss_db));
          std::fill(r.te_k.begin(), r.te_k.end(),
                    noisecal::cable_effective_te(e.loss_db, e.t_in_k,
                                                 e.t_out_k, e.model));
        } else {
          gain_from_record(e.record);
          if (const double* t = std::get_if<double>(&e.te_k)) {
            std::fill(r.te_k.begin(), r.te_k.end(), *t);
          } else {
            const auto& table = std::get<TabulatedTe>(e.te_k);
            for (std::size_t i = 0; i < n; ++i) r.te_k[i] = table.at(grid[i]);
          }
        }
      },
      element.kind());
  return r;
}

SignalChain::SignalChain(std::vector<ChainElement> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("signal chain is empty");
}

ChainReport cascade_noise(const SignalChain& chain, const FrequencyGrid& grid) {
  const std::size_t n = grid.size();
  const auto elements = chain.elements();

  ChainReport report{grid, {}, {}, std::vector<double>(n, 0.0),
                     std::vector<double>(n, 0.0), {}};
  report.labels.reserve(elements.size());
  report.per_element_contribution.reserve(elements.size());

  // Running product of the gains ahead of the current element.
  std::vector<double> gain_ahead(n, 1.0);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const ElementResponse resp = evaluate(elements[k], grid);
    std::vector<double> contribution(n);
    for (std::size_t i = 0; i < n; ++i) {
      contribution[i] = resp.te_k[i] / gain_ahead[i];
      report.te_input_referred[i] += contribution[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!(resp.gain[i] > 0.0) && k + 1 < elements.size()) {
        throw InfiniteReferredNoiseError(elements[k].label(), grid[i]);
      }
      gain_ahead[i] *= resp.gain[i];
    }
    report.labels.push_back(elements[k].label());
    report.per_element_contribution.push_back(std::move(contribution));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(gain_ahead[i] > 0.0) || !std::isfinite(gain_ahead[i]) ||
        !std::isfinite(report.te_input_referred[i])) {
      throw NumericalError("chain gain is zero or noise not representable at " +
                           format_sig(grid[i]) + " Hz");
    }
    report.cumulative_gain_db[i] = 10.0 * std::log10(gain_ahead[i]);
  }
  report.cumulative_gain = std::move(gain_ahead);
  return report;
}

}  // namespace cryochain::rfnet
