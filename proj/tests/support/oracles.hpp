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

// Test-only reference implementations. Nothing here may call into the
// library code paths these are used to check.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "cryochain/rfnet.hpp"

namespace cryochain::testing {

using Complex = std::complex<double>;

/// erfc by the Maclaurin series of erf below 2 and a backward-evaluated
/// continued fraction above.
inline double erfc_oracle(double x) {
  if (x < 2.0) {
    long double sum = 0.0L;
    long double term = x;  // x^(2n+1) (-1)^n / n!
    for (int n = 0; n < 200; ++n) {
      sum += term / (2 * n + 1);
      term *= -static_cast<long double>(x) * x / (n + 1);
      if (std::fabs(term) < 1e-30L) break;
    }
    return static_cast<double>(1.0L - 2.0L / std::sqrt(std::numbers::pi_v<long double>) * sum);
  }
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  long double tail = x;
  for (int k = 400; k >= 1; --k) tail = x + (k / 2.0L) / tail;
  return static_cast<double>(std::exp(-static_cast<long double>(x) * x) /
                             std::sqrt(std::numbers::pi_v<long double>) / tail);
}

struct Abcd {
  Complex a, b, c, d;
};

inline Abcd s_to_abcd(const rfnet::SMatrix& s, double z0) {
  const Complex den = 2.0 * s.s21;
  return {((1.0 + s.s11) * (1.0 - s.s22) + s.s12 * s.s21) / den,
          z0 * ((1.0 + s.s11) * (1.0 + s.s22) - s.s12 * s.s21) / den,
          ((1.0 - s.s11) * (1.0 - s.s22) - s.s12 * s.s21) / (den * z0),
          ((1.0 - s.s11) * (1.0 + s.s22) + s.s12 * s.s21) / den};
}

inline rfnet::SMatrix abcd_to_s(const Abcd& m, double z0) {
  const Complex den = m.a + m.b / z0 + m.c * z0 + m.d;
  return {(m.a + m.b / z0 - m.c * z0 - m.d) / den,
          2.0 * (m.a * m.d - m.b * m.c) / den, 2.0 / den,
          (-m.a + m.b / z0 - m.c * z0 + m.d) / den};
}

inline Abcd mul(const Abcd& x, const Abcd& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

/// Cascade through ABCD parameters, the independent route.
inline rfnet::TwoPortRecord abcd_cascade(const rfnet::TwoPortRecord& a,
                                         const rfnet::TwoPortRecord& b) {
  std::vector<rfnet::SMatrix> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(abcd_to_s(
        mul(s_to_abcd(a[i], a.z_ref()), s_to_abcd(b[i], b.z_ref())),
        a.z_ref()));
  }
  return rfnet::TwoPortRecord(a.grid(), std::move(out), a.z_ref());
}

/// Random strictly passive S-matrix: spectral norm scaled to <= 0.95 and
/// |S21| kept away from zero.
inline rfnet::SMatrix random_passive(std::mt19937_64& gen) {
  std::normal_distribution<double> nd;
  for (;;) {
    rfnet::SMatrix s{{nd(gen), nd(gen)}, {nd(gen), nd(gen)},
                     {nd(gen), nd(gen)}, {nd(gen), nd(gen)}};
    // Largest singular value from the Hermitian product S^H S.
    const double p = std::norm(s.s11) + std::norm(s.s21);
    const double q = std::norm(s.s12) + std::norm(s.s22);
    const Complex r = std::conj(s.s11) * s.s12 + std::conj(s.s21) * s.s22;
    const double smax =
        std::sqrt(0.5 * (p + q) + std::sqrt(0.25 * (p - q) * (p - q) + std::norm(r)));
    const double k = 0.95 / smax;
    s.s11 *= k;
    s.s12 *= k;
    s.s21 *= k;
    s.s22 *= k;
    if (std::abs(s.s21) > 0.05) return s;
  }
}

inline rfnet::TwoPortRecord random_passive_record(std::mt19937_64& gen,
                                                  const rfnet::FrequencyGrid& grid,
                                                  double z_ref = 50.0) {
  std::vector<rfnet::SMatrix> s;
  for (std::size_t i = 0; i < grid.size(); ++i) s.push_back(random_passive(gen));
  return rfnet::TwoPortRecord(grid, std::move(s), z_ref);
}

inline double rel_err(Complex got, Complex want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

/// Max entrywise deviation between two records, relative to the
/// Frobenius norm of the reference matrix at each point.
inline double max_rel_err(const rfnet::TwoPortRecord& x,
                          const rfnet::TwoPortRecord& want) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& a = x[i];
    const auto& b = want[i];
    const double scale = std::max(
        std::sqrt(std::norm(b.s11) + std::norm(b.s12) + std::norm(b.s21) +
                  std::norm(b.s22)),
        1e-300);
    worst = std::max({worst, std::abs(a.s11 - b.s11) / scale,
                      std::abs(a.s12 - b.s12) / scale,
                      std::abs(a.s21 - b.s21) / scale,
                      std::abs(a.s22 - b.s22) / scale});
  }
  return worst;
}

/// Friis sum written out directly: sum_i Te_i / prod_{j<i} G_j.
inline double friis(std::initializer_list<std::pair<double, double>> gain_te) {
  double referral = 1.0;
  double te = 0.0;
  for (const auto& [g, t] : gain_te) {
    te += t / referral;
    referral *= g;
  }
  return te;
}

}  // namespace cryochain::testing
