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

// Deterministic text output and all-or-nothing output directories.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace cryochain::app {

using Json = nlohmann::ordered_json;

/// Number rounded to 9 significant digits for JSON emission.
Json number(double value);

/// CSV row builder with fixed 9-significant-digit numbers.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);

  CsvWriter& field(double value);
  CsvWriter& field(long long value);
  CsvWriter& field(const std::string& text);
  CsvWriter& empty();
  void end_row();

  const std::string& str() const noexcept { return text_; }

 private:
  void separator();
  std::string text_;
  bool row_started_ = false;
};

/// Collects output files in a hidden staging directory next to the final
/// one and moves them into place only on commit(). Anything not committed
/// is removed on destruction.
class OutputStage {
 public:
  explicit OutputStage(std::filesystem::path out_dir);
  ~OutputStage();
  OutputStage(const OutputStage&) = delete;
  OutputStage& operator=(const OutputStage&) = delete;

  /// Writes `relative` (may contain a subdirectory) inside the stage.
  void write(const std::filesystem::path& relative, const std::string& content);
  void commit();

 private:
  std::filesystem::path out_dir_;
  std::filesystem::path staging_;
  std::vector<std::filesystem::path> entries_;
  bool committed_ = false;
};

}  // namespace cryochain::app
