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
#include "cryochain/output.hpp"

#include <algorithm>
#include <fstream>
#include <system_error>
#include <unistd.h>

#include "cryochain/error.hpp"
#include "cryochain/format.hpp"

namespace cryochain::app {

namespace fs = std::filesystem;

Json number(double value) { return round_sig(value, 9); }

CsvWriter::CsvWriter(const std::vector<std::string>& header) {
  for (const auto& h : header) field(h);
  end_row();
}

void CsvWriter::separator() {
  if (row_started_) text_ += ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::field(double value) {
  separator();
  text_ += format_sig(value, 9);
  return *this;
}

CsvWriter& CsvWriter::field(long long value) {
  separator();
  text_ += std::to_string(value);
  return *this;
}

CsvWriter& CsvWriter::field(const std::string& text) {
  separator();
  if (text.find_first_of(",\"\n") == std::string::npos) {
    text_ += text;
    return *this;
  }
  text_ += '"';
  for (char c : text) {
    if (c == '"') text_ += '"';
    text_ += c;
  }
  text_ += '"';
  return *this;
}

CsvWriter& CsvWriter::empty() {
  separator();
  return *this;
}

void CsvWriter::end_row() {
  text_ += '\n';
  row_started_ = false;
}

OutputStage::OutputStage(fs::path out_dir) : out_dir_(std::move(out_dir)) {
  const fs::path parent = fs::absolute(out_dir_).parent_path();
  fs::create_directories(parent);
  staging_ = parent / (".cryochain-stage-" + out_dir_.filename().string() +
                       "-" + std::to_string(::getpid()));
  fs::remove_all(staging_);
  fs::create_directories(staging_);
}

OutputStage::~OutputStage() {
  if (!committed_) {
    std::error_code ec;
    fs::remove_all(staging_, ec);
  }
}

void OutputStage::write(const fs::path& relative, const std::string& content) {
  const fs::path target = staging_ / relative;
  fs::create_directories(target.parent_path());
  std::ofstream f(target, std::ios::binary);
  f << content;
  f.close();
  if (!f) throw Error("failed writing " + target.string());
  const fs::path top = *relative.begin();
  if (std::find(entries_.begin(), entries_.end(), top) == entries_.end()) {
    entries_.push_back(top);
  }
}

void OutputStage::commit() {
  fs::create_directories(out_dir_);
  for (const auto& entry : entries_) {
    const fs::path dest = out_dir_ / entry;
    if (fs::is_directory(dest)) fs::remove_all(dest);
    fs::rename(staging_ / entry, dest);
  }
  fs::remove_all(staging_);
  committed_ = true;
}

}  // namespace cryochain::app
