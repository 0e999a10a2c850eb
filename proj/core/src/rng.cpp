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
#include "cryochain/rng.hpp"

#include <cmath>
#include <numbers>

namespace cryochain::rng {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline double to_open_unit(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t bits =
      (static_cast<std::uint64_t>(a >> 5) << 26) | (b >> 6);
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter c, Key k) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
  return c;
}

CounterRng::CounterRng(std::uint64_t seed) noexcept
    : seed_(seed),
      key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)} {}

Philox4x32::Counter CounterRng::block(std::uint64_t index,
                                      std::uint32_t lane) const {
  return Philox4x32::block({static_cast<std::uint32_t>(index),
                            static_cast<std::uint32_t>(index >> 32), lane, 0u},
                           key_);
}

std::array<double, 2> CounterRng::uniforms(std::uint64_t index,
                                           std::uint32_t lane) const {
  const auto b = block(index, lane);
  return {to_open_unit(b[0], b[1]), to_open_unit(b[2], b[3])};
}

std::array<double, 2> CounterRng::normals(std::uint64_t index,
                                          std::uint32_t lane) const {
  const auto [u1, u2] = uniforms(index, lane);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace cryochain::rng
