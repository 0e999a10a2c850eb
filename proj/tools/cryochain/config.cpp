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
#include "cryochain/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cryochain/touchstone.hpp"

namespace cryochain::app {

namespace fs = std::filesystem;

namespace {

const Json& member(const Json& j, std::string_view key) {
  if (!j.is_object()) throw ConfigError("expected an object around '" + std::string(key) + "'");
  const auto it = j.find(std::string(key));
  if (it == j.end()) throw ConfigError("missing required key '" + std::string(key) + "'");
  return *it;
}

std::string get_string(const Json& j, std::string_view key, std::string fallback) {
  const auto it = j.find(std::string(key));
  if (it == j.end()) return fallback;
  if (!it->is_string()) throw ConfigError("'" + std::string(key) + "' must be a string");
  return it->get<std::string>();
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (!(std::isalnum(c) || c == '_' || c == '-' || c == '.')) return false;
  }
  return true;
}

rfnet::CableModel parse_cable_model(const Json& j) {
  const std::string model = get_string(j, "model", "distributed");
  if (model == "midpoint") return rfnet::MidpointProfile{get_number(j, "t_mid_k")};
  if (model == "distributed") {
    return rfnet::DistributedProfile{
        static_cast<std::size_t>(get_count(j, "segments", 64))};
  }
  throw ConfigError("unknown cable model '" + model + "' (midpoint|distributed)");
}

// An S-parameter file plus the element's noise temperature: an explicit
// te_k wins, otherwise the file's noise block (Fmin) is used.
rfnet::SParamBlock load_sparam_block(const Json& j, const fs::path& base_dir) {
  fs::path path = get_string(j, "path", "");
  if (path.empty()) throw ConfigError("sparam_file element needs 'path'");
  if (path.is_relative()) path = base_dir / path;
  const auto doc = touchstone::read_touchstone_file(path);
  if (j.contains("te_k")) return {doc.data, get_number(j, "te_k")};
  if (auto te = touchstone::fmin_noise_temperature(doc)) return {doc.data, *te};
  throw ConfigError("sparam_file '" + path.string() +
                    "' has no 'te_k' and no noise block");
}

}  // namespace

LoadedConfig load_config(const fs::path& path,
                         const std::vector<std::string>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  LoadedConfig cfg;
  try {
    cfg.doc = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  if (!cfg.doc.is_object()) throw ConfigError(path.string() + ": top level must be an object");
  for (const auto& o : overrides) apply_override(cfg.doc, o);
  cfg.path = path;
  cfg.base_dir = fs::absolute(path).parent_path();
  return cfg;
}

void set_path(Json& doc, std::string_view dotted_key, Json value) {
  Json* node = &doc;
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = dotted_key.find('.', start);
    const std::string part(dotted_key.substr(start, dot - start));
    if (part.empty()) throw ConfigError("empty component in key '" + std::string(dotted_key) + "'");
    Json* child = nullptr;
    if (node->is_array()) {
      // Array elements are addressed by index and must already exist.
      std::size_t index = 0;
      const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), index);
      if (ec != std::errc() || end != part.data() + part.size() || index >= node->size()) {
        throw ConfigError("cannot set '" + std::string(dotted_key) + "': no element '" + part +
                          "' in array");
      }
      child = &(*node)[index];
    } else if (node->is_object()) {
      child = &(*node)[part];
    } else {
      throw ConfigError("cannot set '" + std::string(dotted_key) + "': '" + part +
                        "' is not inside an object or array");
    }
    if (dot == std::string_view::npos) {
      *child = std::move(value);
      return;
    }
    node = child;
    if (node->is_null()) *node = Json::object();
    start = dot + 1;
  }
}

void apply_override(Json& doc, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError("override '" + std::string(assignment) + "' is not key=value");
  }
  const std::string text(assignment.substr(eq + 1));
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  set_path(doc, assignment.substr(0, eq), std::move(value));
}

double get_number(const Json& j, std::string_view key) {
  const Json& v = member(j, key);
  if (!v.is_number()) throw ConfigError("'" + std::string(key) + "' must be a number");
  return v.get<double>();
}

double get_number(const Json& j, std::string_view key, double fallback) {
  return j.contains(std::string(key)) ? get_number(j, key) : fallback;
}

std::uint64_t get_count(const Json& j, std::string_view key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError("'" + std::string(key) + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::uint64_t get_count(const Json& j, std::string_view key, std::uint64_t fallback) {
  return j.contains(std::string(key)) ? get_count(j, key) : fallback;
}

rfnet::FrequencyGrid parse_grid(const Json& j) {
  if (j.contains("points_hz")) {
    const Json& pts = j["points_hz"];
    if (!pts.is_array()) throw ConfigError("'points_hz' must be an array");
    std::vector<double> f;
    for (const auto& p : pts) {
      if (!p.is_number()) throw ConfigError("'points_hz' entries must be numbers");
      f.push_back(p.get<double>());
    }
    return rfnet::FrequencyGrid(std::move(f));
  }
  return rfnet::FrequencyGrid::linspace(get_number(j, "start_hz"), get_number(j, "stop_hz"),
                                        get_count(j, "points"));
}

rfnet::SignalChain parse_chain(const Json& elements, const fs::path& base_dir) {
  if (!elements.is_array()) throw ConfigError("chain elements must be an array");
  std::vector<rfnet::ChainElement> out;
  std::set<std::string> labels;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Json& e = elements[k];
    if (!e.is_object()) throw ConfigError("chain element " + std::to_string(k) + " is not an object");
    const std::string type = get_string(e, "type", "");
    const std::string label = get_string(e, "label", type + std::to_string(k));
    if (!valid_label(label)) {
      throw ConfigError("element label '" + label + "' must use [A-Za-z0-9_.-]");
    }
    if (!labels.insert(label).second) throw ConfigError("duplicate element label '" + label + "'");

    if (type == "attenuator") {
      out.emplace_back(label, rfnet::Attenuator{get_number(e, "loss_db"), get_number(e, "t_phys_k")});
    } else if (type == "amplifier") {
      if (e.contains("s2p")) {
        fs::path p = e["s2p"].get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        out.emplace_back(label, rfnet::Amplifier{touchstone::read_touchstone_file(p).data,
                                                 get_number(e, "te_k")});
      } else {
        out.emplace_back(label, rfnet::Amplifier{get_number(e, "gain_db"), get_number(e, "te_k")});
      }
    } else if (type == "cable") {
      out.emplace_back(label, rfnet::Cable{get_number(e, "loss_db"), get_number(e, "t_in_k"),
                                           get_number(e, "t_out_k"), parse_cable_model(e)});
    } else if (type == "sparam_file") {
      out.emplace_back(label, load_sparam_block(e, base_dir));
    } else {
      throw ConfigError("element " + std::to_string(k) + ": unknown type '" + type +
                        "' (attenuator|amplifier|cable|sparam_file)");
    }
  }
  return rfnet::SignalChain(std::move(out));
}

noisecal::NoiseSourceSpec parse_source(const Json& j) {
  const double t_cold = get_number(j, "t_cold_k", rfnet::kT0);
  if (j.contains("enr_db") == j.contains("t_hot_k")) {
    throw ConfigError("noise source needs exactly one of 'enr_db' or 't_hot_k'");
  }
  if (j.contains("enr_db")) return noisecal::NoiseSourceSpec::from_enr(get_number(j, "enr_db"), t_cold);
  return noisecal::NoiseSourceSpec::from_temperatures(get_number(j, "t_hot_k"), t_cold);
}

readout::ResonatorModel parse_resonator(const Json& j) {
  return readout::ResonatorModel(get_number(j, "f_r_hz"), get_number(j, "kappa_hz"),
                                 get_number(j, "chi_hz"));
}

budget::DeploymentSpec parse_deployment(const Json& j) {
  return {get_count(j, "n_qubits"), get_count(j, "qubits_per_line"), get_number(j, "p_lna_w"),
          get_count(j, "bias_lines_per_lna", 1)};
}

budget::StageSpec parse_stage(const Json& j) {
  return {get_string(j, "name", "4K"), get_number(j, "temperature_k", 4.0),
          get_number(j, "cooling_power_w"), get_number(j, "allocation_fraction", 1.0 / 3.0)};
}

budget::BiasTopology parse_topology(const Json& j) {
  const std::string kind = get_string(j, "kind", "");
  budget::BiasTopology t;
  if (kind == "direct") {
    t.kind = budget::BiasKind::Direct;
  } else if (kind == "multiplexed") {
    t.kind = budget::BiasKind::Multiplexed;
  } else {
    throw ConfigError("bias topology kind must be 'direct' or 'multiplexed'");
  }
  t.rail_v = get_number(j, "rail_v");
  const Json& stages = member(j, "stages");
  if (!stages.is_array()) throw ConfigError("'stages' must be an array");
  for (const auto& s : stages) t.stages.push_back({get_number(s, "v_drop"), get_number(s, "i_a")});
  t.validate();
  return t;
}

}  // namespace cryochain::app
