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
#include "cryochain/touchstone.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cryochain/error.hpp"
#include "cryochain/format.hpp"

namespace cryochain::touchstone {

namespace {

using rfnet::Complex;

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
// Zero magnitudes have no dB representation; they are written at this floor.
constexpr double kDbFloor = -1000.0;

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

Complex decode(double a, double b, DataFormat format, std::size_t line) {
  switch (format) {
    case DataFormat::RI:
      return {a, b};
    case DataFormat::MA:
      if (a < 0.0) throw ParseError(line, "negative magnitude in MA data");
      return std::polar(a, b * kDegToRad);
    case DataFormat::DB:
      return std::polar(std::pow(10.0, a / 20.0), b * kDegToRad);
  }
  return {};
}

std::pair<double, double> encode(Complex z, DataFormat format) {
  switch (format) {
    case DataFormat::RI:
      return {z.real(), z.imag()};
    case DataFormat::MA:
      return {std::abs(z), std::arg(z) * kRadToDeg};
    case DataFormat::DB: {
      const double mag = std::abs(z);
      const double db = mag > 0.0 ? 20.0 * std::log10(mag) : kDbFloor;
      return {std::max(db, kDbFloor), std::arg(z) * kRadToDeg};
    }
  }
  return {};
}

void parse_option_line(std::string_view body, std::size_t line,
                       OptionLine& opt) {
  const auto fields = split_fields(body);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string tok = upper(fields[i]);
    if (tok == "HZ") {
      opt.unit = FreqUnit::Hz;
    } else if (tok == "KHZ") {
      opt.unit = FreqUnit::kHz;
    } else if (tok == "MHZ") {
      opt.unit = FreqUnit::MHz;
    } else if (tok == "GHZ") {
      opt.unit = FreqUnit::GHz;
    } else if (tok == "S") {
      // only supported parameter
    } else if (tok == "Y" || tok == "Z" || tok == "H" || tok == "G") {
      throw ParseError(line, "parameter '" + tok + "' not supported (only S)");
    } else if (tok == "RI") {
      opt.format = DataFormat::RI;
    } else if (tok == "MA") {
      opt.format = DataFormat::MA;
    } else if (tok == "DB") {
      opt.format = DataFormat::DB;
    } else if (tok == "R") {
      if (i + 1 >= fields.size()) {
        throw ParseError(line, "option 'R' without a reference impedance");
      }
      const auto z = parse_double(fields[++i]);
      if (!z || !(*z > 0.0)) {
        throw ParseError(line, "invalid reference impedance '" +
                                   std::string(fields[i]) + "'");
      }
      opt.z_ref_ohm = *z;
    } else {
      throw ParseError(line, "unknown option token '" +
                                 std::string(fields[i]) + "'");
    }
  }
}

std::vector<double> parse_numbers(const std::vector<std::string_view>& fields,
                                  std::size_t line) {
  std::vector<double> out;
  out.reserve(fields.size());
  for (auto f : fields) {
    const auto v = parse_double(f);
    if (!v) {
      throw ParseError(line, "invalid number '" + std::string(f) + "'");
    }
    out.push_back(*v);
  }
  return out;
}

TouchstoneDocument parse_impl(std::string_view text, std::size_t& line_no) {
  OptionLine opt;
  bool have_option = false;
  std::vector<std::string> comments;
  std::vector<double> freqs;
  std::vector<rfnet::SMatrix> mats;
  std::vector<NoiseParameters> noise;
  double scale = unit_scale(opt.unit);

  std::size_t pos = 0;
  line_no = 0;
  while (pos <= text.size()) {
    if (pos == text.size()) break;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto bang = line.find('!'); bang != std::string_view::npos) {
      comments.emplace_back(line.substr(bang + 1));
      line = line.substr(0, bang);
    }
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (fields.front().front() == '[') {
      throw ParseError(line_no, "Touchstone v2 keyword '" +
                                    std::string(fields.front()) +
                                    "' not supported (v1 only)");
    }
    if (fields.front().front() == '#') {
      if (have_option) throw ParseError(line_no, "duplicate option line");
      if (!freqs.empty()) {
        throw ParseError(line_no, "option line after data rows");
      }
      const auto hash = line.find('#');
      parse_option_line(line.substr(hash + 1), line_no, opt);
      scale = unit_scale(opt.unit);
      have_option = true;
      continue;
    }

    const auto v = parse_numbers(fields, line_no);
    const double f = v.front() * scale;
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw ParseError(line_no, "frequency must be > 0");
    }
    if (v.size() == 9) {
      if (!noise.empty()) {
        throw ParseError(line_no, "S-parameter row after noise block");
      }
      if (!freqs.empty() && !(f > freqs.back())) {
        throw ParseError(line_no, "frequency not strictly increasing");
      }
      rfnet::SMatrix m;
      m.s11 = decode(v[1], v[2], opt.format, line_no);
      m.s21 = decode(v[3], v[4], opt.format, line_no);
      m.s12 = decode(v[5], v[6], opt.format, line_no);
      m.s22 = decode(v[7], v[8], opt.format, line_no);
      freqs.push_back(f);
      mats.push_back(m);
    } else if (v.size() == 5 && !freqs.empty()) {
      if (!noise.empty() && !(f > noise.back().frequency_hz)) {
        throw ParseError(line_no,
                         "noise block frequency not strictly increasing");
      }
      if (v[2] < 0.0) {
        throw ParseError(line_no, "negative magnitude in noise data");
      }
      noise.push_back({f, v[1], std::polar(v[2], v[3] * kDegToRad), v[4]});
    } else {
      throw ParseError(line_no, "expected 9 fields for a two-port row, got " +
                                    std::to_string(v.size()));
    }
  }

  // An empty document still reports line 1.
  if (freqs.empty()) throw ParseError(std::max<std::size_t>(line_no, 1), "no data rows");
  try {
    return TouchstoneDocument{
        opt, std::move(comments),
        rfnet::TwoPortRecord(rfnet::FrequencyGrid(std::move(freqs)),
                             std::move(mats), opt.z_ref_ohm),
        std::move(noise)};
  } catch (const DomainError& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace

double unit_scale(FreqUnit unit) {
  switch (unit) {
    case FreqUnit::Hz: return 1.0;
    case FreqUnit::kHz: return 1e3;
    case FreqUnit::MHz: return 1e6;
    case FreqUnit::GHz: return 1e9;
  }
  return 1.0;
}

std::string_view to_string(FreqUnit unit) {
  switch (unit) {
    case FreqUnit::Hz: return "Hz";
    case FreqUnit::kHz: return "kHz";
    case FreqUnit::MHz: return "MHz";
    case FreqUnit::GHz: return "GHz";
  }
  return "GHz";
}

std::string_view to_string(DataFormat format) {
  switch (format) {
    case DataFormat::RI: return "RI";
    case DataFormat::MA: return "MA";
    case DataFormat::DB: return "DB";
  }
  return "MA";
}

TouchstoneDocument parse_touchstone(std::string_view text) {
  std::size_t line_no = 0;
  try {
    return parse_impl(text, line_no);
  } catch (const ParseError&) {
    throw;
  } catch (const std::bad_alloc&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(line_no, e.what());
  }
}

TouchstoneDocument read_touchstone_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open Touchstone file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_touchstone(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

std::string write_touchstone(const TouchstoneDocument& doc, DataFormat format) {
  const double scale = unit_scale(doc.options.unit);
  std::string out;
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
  };

  out += "# ";
  out += to_string(doc.options.unit);
  out += " S ";
  out += to_string(format);
  out += " R ";
  num(doc.options.z_ref_ohm);
  out += '\n';
  for (const auto& c : doc.comments) {
    out += '!';
    out += c;
    out += '\n';
  }

  const auto& rec = doc.data;
  for (std::size_t i = 0; i < rec.size(); ++i) {
    num(rec.grid()[i] / scale);
    const auto& m = rec[i];
    for (const Complex& z : {m.s11, m.s21, m.s12, m.s22}) {
      const auto [a, b] = encode(z, format);
      out += ' ';
      num(a);
      out += ' ';
      num(b);
    }
    out += '\n';
  }
  for (const auto& np : doc.noise) {
    num(np.frequency_hz / scale);
    out += ' ';
    num(np.fmin_db);
    out += ' ';
    num(std::abs(np.gamma_opt));
    out += ' ';
    num(std::arg(np.gamma_opt) * kRadToDeg);
    out += ' ';
    num(np.rn_normalized);
    out += '\n';
  }
  return out;
}

std::optional<rfnet::TabulatedTe> fmin_noise_temperature(
    const TouchstoneDocument& doc) {
  if (doc.noise.empty()) return std::nullopt;
  std::vector<double> f;
  std::vector<double> te;
  for (const auto& np : doc.noise) {
    f.push_back(np.frequency_hz);
    te.push_back(rfnet::te_from_nf(np.fmin_db));
  }
  return rfnet::TabulatedTe(rfnet::FrequencyGrid(std::move(f)), std::move(te));
}

}  // namespace cryochain::touchstone
