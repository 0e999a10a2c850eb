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

#include <optional>
#include <string>
#include <string_view>

namespace cryochain {

/// Formats with `digits` significant digits ("%.*g"). Used for every
/// numeric field the tools emit so output is stable across platforms.
std::string format_sig(double value, int digits = 9);

/// Rounds a value to `digits` significant digits.
double round_sig(double value, int digits = 9);

/// Strict full-string floating point parse; nullopt on any junk or
/// on non-finite results.
std::optional<double> parse_double(std::string_view text);

}  // namespace cryochain
