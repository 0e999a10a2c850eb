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

// Touchstone v1 two-port (.s2p) reader and writer.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cryochain/rfnet.hpp"

namespace cryochain::touchstone {

enum class FreqUnit { Hz, kHz, MHz, GHz };
enum class DataFormat { RI, MA, DB };

/// `# <unit> S <format> R <z>`; the defaults are the v1 defaults.
struct OptionLine {
  FreqUnit unit = FreqUnit::GHz;
  DataFormat format = DataFormat::MA;
  double z_ref_ohm = 50.0;

  bool operator==(const OptionLine&) const = default;
};

/// One row of the optional noise-parameter block.
struct NoiseParameters {
  double frequency_hz = 0.0;
  double fmin_db = 0.0;
  rfnet::Complex gamma_opt;
  /// Noise resistance normalized to the reference impedance.
  double rn_normalized = 0.0;
};

struct TouchstoneDocument {
  OptionLine options;
  std::vector<std::string> comments;
  rfnet::TwoPortRecord data;
  std::vector<NoiseParameters> noise;
};

double unit_scale(FreqUnit unit);
std::string_view to_string(FreqUnit unit);
std::string_view to_string(DataFormat format);

/// Throws ParseError (1-based line) on anything that is not a valid v1
/// two-port body. Never throws anything else for bad input.
TouchstoneDocument parse_touchstone(std::string_view text);

/// Reads and parses a file; unreadable files raise InputError.
TouchstoneDocument read_touchstone_file(const std::filesystem::path& path);

/// Serializes in the requested format with the document's frequency unit
/// and reference impedance. Values carry 17 significant digits.
std::string write_touchstone(const TouchstoneDocument& doc, DataFormat format);

/// Minimum noise temperature per noise-block frequency, from Fmin.
std::optional<rfnet::TabulatedTe> fmin_noise_temperature(
    const TouchstoneDocument& doc);

}  // namespace cryochain::touchstone
