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

// Counter-based random numbers: every draw is a pure function of
// (seed, index, lane), so work can be split across threads in any way
// without changing the sequence.

#include <array>
#include <cstdint>

namespace cryochain::rng {

/// Philox4x32 with 10 rounds.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key);
};

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

  /// Raw 128-bit block for draw `index` on sub-stream `lane`.
  Philox4x32::Counter block(std::uint64_t index, std::uint32_t lane) const;

  /// Two uniforms in the open interval (0, 1) with 53-bit resolution.
  std::array<double, 2> uniforms(std::uint64_t index,
                                 std::uint32_t lane) const;

  /// Two independent standard normals (Box-Muller on uniforms()).
  std::array<double, 2> normals(std::uint64_t index, std::uint32_t lane) const;

 private:
  std::uint64_t seed_;
  Philox4x32::Key key_;
};

}  // namespace cryochain::rng
