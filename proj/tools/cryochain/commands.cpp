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
#include "cryochain/commands.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cryochain/format.hpp"
#include "cryochain/output.hpp"

namespace cryochain::app {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    parts.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

Json sweep_value(const std::string& text) {
  Json v = Json::parse(text, nullptr, false);
  if (v.is_discarded()) return text;
  return v;
}

std::string sweep_cell(const Json& v) {
  if (v.is_number()) return format_sig(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void reject_sweep(const CommandContext& ctx, const char* command) {
  if (ctx.sweep) {
    throw ConfigError(std::string("--sweep is not supported by '") + command +
                      "' (readout and budget only)");
  }
}

}  // namespace

Sweep parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw ConfigError("sweep '" + text + "' is not key=v1,v2,...");
  }
  Sweep s;
  s.key = text.substr(0, eq);
  for (const auto& part : split(std::string_view(text).substr(eq + 1), ',')) {
    if (part.empty()) throw ConfigError("sweep '" + text + "' has an empty value");
    s.values.push_back(sweep_value(part));
  }
  return s;
}

// ---------------------------------------------------------------- chain

int cmd_chain(const CommandContext& ctx) {
  reject_sweep(ctx, "chain");
  const Json& doc = ctx.config.doc;
  if (!doc.contains("grid")) throw ConfigError("chain config needs 'grid'");
  if (!doc.contains("elements")) throw ConfigError("chain config needs 'elements'");
  const auto grid = parse_grid(doc["grid"]);
  const auto chain = parse_chain(doc["elements"], ctx.config.base_dir);

  OutputStage stage(ctx.out_dir);
  const auto report = rfnet::cascade_noise(chain, grid);

  std::vector<std::string> header{"freq_hz", "gain_db", "te_k"};
  for (const auto& label : report.labels) header.push_back(label + "_te_k");
  CsvWriter csv(header);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv.field(grid[i]).field(report.cumulative_gain_db[i]).field(report.te_input_referred[i]);
    for (const auto& contrib : report.per_element_contribution) csv.field(contrib[i]);
    csv.end_row();
  }
  stage.write("chain_report.csv", csv.str());
  stage.commit();
  ctx.out << "chain: " << grid.size() << " frequencies, " << chain.size()
          << " elements -> " << (ctx.out_dir / "chain_report.csv").string() << "\n";
  return kExitOk;
}

// ------------------------------------------------------------- noisecal

namespace {

struct MeasurementRow {
  std::size_t line = 0;
  double freq_hz = 0.0;
  // Either y, or the two powers.
  double y = 0.0;
  double p_hot = 0.0;
  double p_cold = 0.0;
};

struct MeasurementTable {
  bool has_powers = false;
  std::vector<MeasurementRow> rows;
};

MeasurementTable read_measurement_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open measurement file " + path.string());
  MeasurementTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  const auto fail = [&](const std::string& what) {
    throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split(line, ',');
    if (!have_header) {
      for (auto& f : fields) {
        std::transform(f.begin(), f.end(), f.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      }
      if (fields == std::vector<std::string>{"freq_hz", "y_linear"}) {
        table.has_powers = false;
      } else if (fields == std::vector<std::string>{"freq_hz", "p_hot_w", "p_cold_w"}) {
        table.has_powers = true;
      } else {
        fail("header must be 'freq_hz,y_linear' or 'freq_hz,p_hot_w,p_cold_w'");
      }
      have_header = true;
      continue;
    }
    const std::size_t want = table.has_powers ? 3 : 2;
    if (fields.size() != want) {
      fail("expected " + std::to_string(want) + " fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> v;
    for (const auto& f : fields) {
      const auto d = parse_double(f);
      if (!d) fail("invalid number '" + f + "'");
      v.push_back(*d);
    }
    if (!(v[0] > 0.0)) fail("frequency must be > 0");
    MeasurementRow row;
    row.line = line_no;
    row.freq_hz = v[0];
    if (table.has_powers) {
      row.p_hot = v[1];
      row.p_cold = v[2];
    } else {
      row.y = v[1];
    }
    table.rows.push_back(row);
  }
  if (!have_header) throw ConfigError(path.string() + ": empty measurement file");
  if (table.rows.empty()) throw ConfigError(path.string() + ": no measurement rows");
  return table;
}

struct NoisecalRow {
  std::optional<double> te_sys;
  std::optional<noisecal::DeembedResult> result;
  std::string status = "ok";
};

}  // namespace

int cmd_noisecal(const CommandContext& ctx) {
  reject_sweep(ctx, "noisecal");
  const Json& doc = ctx.config.doc;
  if (!doc.contains("measurement")) throw ConfigError("noisecal config needs 'measurement'");
  if (!doc["measurement"].is_string()) throw ConfigError("'measurement' must be a path string");
  fs::path meas_path = doc["measurement"].get<std::string>();
  if (meas_path.is_relative()) meas_path = ctx.config.base_dir / meas_path;
  if (!doc.contains("source")) throw ConfigError("noisecal config needs 'source'");
  const auto source = parse_source(doc["source"]);
  const double backend_te = get_number(doc, "backend_te_k");
  const double dut_gain_db = get_number(doc, "dut_gain_db");
  std::optional<rfnet::SignalChain> input_chain;
  if (doc.contains("input_chain") && !doc["input_chain"].empty()) {
    input_chain = parse_chain(doc["input_chain"], ctx.config.base_dir);
  }
  const auto table = read_measurement_csv(meas_path);

  std::vector<NoisecalRow> rows(table.rows.size());
  std::size_t failed = 0;
  std::vector<std::string> warnings;
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto& m = table.rows[k];
    auto& row = rows[k];
    try {
      if (table.has_powers && !(m.p_hot > 0.0 && m.p_cold > 0.0)) {
        row.status = "invalid power";
      } else {
        const auto meas = table.has_powers
                              ? noisecal::NoiseMeasurement::from_powers(source, m.p_hot, m.p_cold)
                              : noisecal::NoiseMeasurement::from_y(source, m.y);
        row.te_sys = noisecal::y_factor_te(meas);
        row.result = input_chain
                         ? noisecal::deembed_dut_te(*row.te_sys,
                                                    noisecal::DeembedContext{*input_chain,
                                                                             backend_te,
                                                                             dut_gain_db},
                                                    m.freq_hz)
                         : noisecal::deembed_dut_te(*row.te_sys, 0.0, 1.0, backend_te,
                                                    dut_gain_db);
        for (const auto& w : row.result->warnings) {
          if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
        }
      }
    } catch (const NoExcessNoiseError&) {
      row.status = "no excess noise";
    } catch (const NonphysicalMeasurementError&) {
      row.status = "nonphysical measurement";
    } catch (const OvercorrectedDeembedError&) {
      row.status = "overcorrected de-embed";
    } catch (const DomainError& e) {
      // from_y rejects Y <= 0 before the inversion sees it.
      if (!table.has_powers && !(m.y > 1.0)) {
        row.status = "no excess noise";
      } else {
        throw;
      }
    }
    if (row.status != "ok") {
      ++failed;
      spdlog::warn("{}:{}: {}", meas_path.string(), m.line, row.status);
    }
  }
  for (const auto& w : warnings) spdlog::warn("{}", w);

  if (failed == rows.size()) {
    spdlog::error("no measurement row could be de-embedded");
    ctx.out << "noisecal: all " << rows.size() << " rows failed\n";
    return kExitNumerical;
  }

  CsvWriter csv({"freq_hz", "te_sys_k", "te_dut_k", "backend_term_k", "status"});
  for (std::size_t k = 0; k < rows.size(); ++k) {
    csv.field(table.rows[k].freq_hz);
    if (rows[k].te_sys) {
      csv.field(*rows[k].te_sys);
    } else {
      csv.empty();
    }
    if (rows[k].result) {
      csv.field(rows[k].result->te_dut_k).field(rows[k].result->backend_term_k);
    } else {
      csv.empty().empty();
    }
    csv.field(rows[k].status).end_row();
  }
  OutputStage stage(ctx.out_dir);
  stage.write("te_dut.csv", csv.str());
  stage.commit();
  ctx.out << "noisecal: " << rows.size() - failed << " of " << rows.size()
          << " rows de-embedded -> " << (ctx.out_dir / "te_dut.csv").string() << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- readout

namespace {

struct ReadoutRun {
  readout::ShotSet shots;
  readout::Confusion confusion;
  std::vector<readout::HistogramBin> histogram;
  Json summary;
};

ReadoutRun run_readout(const Json& doc, const fs::path& base_dir, std::uint64_t seed,
                       unsigned workers) {
  if (!doc.contains("resonator")) throw ConfigError("readout config needs 'resonator'");
  const auto resonator = parse_resonator(doc["resonator"]);

  readout::ReadoutConfig cfg;
  cfg.probe_freq_hz = get_number(doc, "probe_freq_hz", get_number(doc["resonator"], "f_r_hz"));
  cfg.p_in_w = get_number(doc, "p_in_w");
  cfg.tau_s = get_number(doc, "tau_s", 1e-6);
  cfg.decay_prob = get_number(doc, "decay_prob", 0.0);
  if (doc.contains("t_sys_k") == doc.contains("chain")) {
    throw ConfigError("readout config needs exactly one of 't_sys_k' or 'chain'");
  }
  if (doc.contains("chain")) {
    // System temperature is the chain's input-referred Te at the probe.
    const auto chain = parse_chain(doc["chain"], base_dir);
    const auto report = rfnet::cascade_noise(chain, rfnet::FrequencyGrid({cfg.probe_freq_hz}));
    cfg.t_sys_k = report.te_input_referred.front();
  } else {
    cfg.t_sys_k = get_number(doc, "t_sys_k");
  }
  cfg.validate();

  const std::uint64_t n = get_count(doc, "n_per_state");
  if (n < 2) throw ConfigError("'n_per_state' must be at least 2");
  const std::uint64_t bins = get_count(doc, "histogram_bins", 64);
  if (bins < 1) throw ConfigError("'histogram_bins' must be at least 1");

  readout::ShotOptions options;
  options.workers = workers;
  double snr_model = 0.0;
  if (doc.contains("target_snr")) {
    snr_model = get_number(doc, "target_snr");
    options.sigma_override = readout::sigma_for_snr(cfg, resonator, snr_model);
  } else {
    snr_model = readout::snr_from_chain(cfg, resonator);
  }
  const double sigma = options.sigma_override.value_or(readout::noise_sigma(cfg));

  ReadoutRun run;
  run.shots = readout::simulate_shots(cfg, resonator, n, seed, options);
  const auto aligned = readout::align_rotation(run.shots);
  run.confusion = readout::classify_and_confusion(run.shots);
  run.histogram = readout::histogram_q(aligned.rotated, bins);
  const double snr_eq1 = readout::snr_estimate(run.shots);

  Json& s = run.summary;
  s["seed"] = seed;
  s["n_per_state"] = n;
  s["t_sys_k"] = number(cfg.t_sys_k);
  s["sigma"] = number(sigma);
  s["decay_prob"] = number(cfg.decay_prob);
  s["snr_model"] = number(snr_model);
  s["snr_eq1"] = number(snr_eq1);
  s["f0"] = number(run.confusion.f0);
  s["f1"] = number(run.confusion.f1);
  s["f_avg"] = number(run.confusion.f_avg);
  s["fidelity_from_snr"] = number(readout::fidelity_from_snr(snr_eq1));
  s["fidelity_model"] = number(readout::fidelity_from_snr(snr_model));
  s["threshold_q"] = number(run.confusion.threshold);
  s["rotation_rad"] = number(run.confusion.angle);
  return run;
}

}  // namespace

int cmd_readout(const CommandContext& ctx) {
  const Json& doc = ctx.config.doc;
  OutputStage stage(ctx.out_dir);

  if (ctx.sweep) {
    const Sweep sweep = parse_sweep(*ctx.sweep);
    CsvWriter csv({sweep.key, "snr_model", "snr_eq1", "f0", "f1", "f_avg", "fidelity_from_snr"});
    Json all = Json::array();
    for (const auto& value : sweep.values) {
      Json point = doc;
      set_path(point, sweep.key, value);
      const auto run = run_readout(point, ctx.config.base_dir, ctx.seed, ctx.workers);
      const Json& s = run.summary;
      csv.field(sweep_cell(value));
      for (const char* k : {"snr_model", "snr_eq1", "f0", "f1", "f_avg", "fidelity_from_snr"}) {
        csv.field(s[k].get<double>());
      }
      csv.end_row();
      Json entry = Json::object();
      entry[sweep.key] = value;
      entry.update(s);
      all.push_back(std::move(entry));
      ctx.out << sweep.key << "=" << sweep_cell(value) << "  f_avg=" << format_sig(s["f_avg"].get<double>(), 6)
              << "  snr_eq1=" << format_sig(s["snr_eq1"].get<double>(), 6) << "\n";
    }
    stage.write("sweep.csv", csv.str());
    stage.write("sweep.json", all.dump(2) + "\n");
    stage.commit();
    return kExitOk;
  }

  const auto run = run_readout(doc, ctx.config.base_dir, ctx.seed, ctx.workers);

  CsvWriter shots({"i", "q", "true_state", "assigned_state"});
  const auto points = run.shots.shots();
  for (std::size_t k = 0; k < points.size(); ++k) {
    shots.field(points[k].i).field(points[k].q)
        .field(static_cast<long long>(points[k].true_state))
        .field(static_cast<long long>(run.confusion.assigned[k]));
    shots.end_row();
  }
  CsvWriter hist({"bin_center_q", "count_state0", "count_state1"});
  for (const auto& b : run.histogram) {
    hist.field(b.center_q).field(static_cast<long long>(b.count0))
        .field(static_cast<long long>(b.count1));
    hist.end_row();
  }
  stage.write("shots.csv", shots.str());
  stage.write("histogram.csv", hist.str());
  stage.write("summary.json", run.summary.dump(2) + "\n");
  stage.commit();

  const Json& s = run.summary;
  ctx.out << "readout: F0=" << format_sig(s["f0"].get<double>(), 6)
          << " F1=" << format_sig(s["f1"].get<double>(), 6)
          << " F_avg=" << format_sig(s["f_avg"].get<double>(), 6)
          << " SNR=" << format_sig(s["snr_eq1"].get<double>(), 6) << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- budget

namespace {

struct BudgetRun {
  budget::BudgetReport report;
  std::optional<budget::TopologyComparison> bias;
  Json json;
};

BudgetRun run_budget(const Json& doc) {
  if (!doc.contains("deployment")) throw ConfigError("budget config needs 'deployment'");
  if (!doc.contains("stage")) throw ConfigError("budget config needs 'stage'");
  const auto deployment = parse_deployment(doc["deployment"]);
  const auto stage = parse_stage(doc["stage"]);

  BudgetRun run;
  run.report = budget::plan_budget(deployment, stage);
  if (doc.contains("bias")) {
    const Json& b = doc["bias"];
    if (!b.contains("direct") || !b.contains("multiplexed")) {
      throw ConfigError("'bias' needs both 'direct' and 'multiplexed' topologies");
    }
    run.bias = budget::compare_topologies(parse_topology(b["direct"]),
                                          parse_topology(b["multiplexed"]));
  }

  Json& j = run.json;
  j["stage"] = {{"name", stage.name},
                {"temperature_k", number(stage.temperature_k)},
                {"cooling_power_w", number(stage.cooling_power_w)},
                {"allocation_fraction", number(stage.allocation_fraction)}};
  j["deployment"] = {{"n_qubits", deployment.n_qubits},
                     {"qubits_per_line", deployment.qubits_per_line},
                     {"p_lna_w", number(deployment.p_lna_w)},
                     {"bias_lines_per_lna", deployment.bias_lines_per_lna}};
  j["n_lines"] = run.report.n_lines;
  j["total_power_w"] = number(run.report.total_power_w);
  j["budget_w"] = number(run.report.budget_w);
  j["utilization"] = number(run.report.utilization);
  j["feasible"] = run.report.feasible;
  j["bias_fanouts"] = run.report.total_bias_lines;
  if (run.bias) {
    Json warnings = Json::array();
    for (const auto& w : run.bias->direct.warnings) warnings.push_back("direct: " + w);
    for (const auto& w : run.bias->multiplexed.warnings) warnings.push_back("multiplexed: " + w);
    j["bias_comparison"] = {{"direct_power_w", number(run.bias->direct.power_w)},
                            {"multiplexed_power_w", number(run.bias->multiplexed.power_w)},
                            {"reduction", number(run.bias->reduction)},
                            {"warnings", warnings}};
  }
  return run;
}

void print_row(std::ostream& out, const std::string& name, const std::string& value) {
  out << "  " << std::left << std::setw(24) << name << value << "\n";
}

void print_budget(std::ostream& out, const BudgetRun& run) {
  const auto& r = run.report;
  print_row(out, "lines", std::to_string(r.n_lines));
  print_row(out, "bias fan-outs", std::to_string(r.total_bias_lines));
  print_row(out, "total LNA power [W]", format_sig(r.total_power_w, 6));
  print_row(out, "budget [W]", format_sig(r.budget_w, 6));
  print_row(out, "utilization", format_sig(r.utilization, 6));
  print_row(out, "feasible", r.feasible ? "yes" : "no");
  if (run.bias) {
    print_row(out, "direct bias [W]", format_sig(run.bias->direct.power_w, 6));
    print_row(out, "multiplexed bias [W]", format_sig(run.bias->multiplexed.power_w, 6));
    print_row(out, "bias reduction", format_sig(run.bias->reduction, 6) + "x");
  }
}

}  // namespace

int cmd_budget(const CommandContext& ctx) {
  const Json& doc = ctx.config.doc;
  OutputStage stage(ctx.out_dir);

  if (ctx.sweep) {
    const Sweep sweep = parse_sweep(*ctx.sweep);
    CsvWriter csv({sweep.key, "n_lines", "total_power_w", "budget_w", "utilization",
                   "feasible", "bias_fanouts"});
    Json all = Json::array();
    for (const auto& value : sweep.values) {
      Json point = doc;
      set_path(point, sweep.key, value);
      const auto run = run_budget(point);
      csv.field(sweep_cell(value))
          .field(static_cast<long long>(run.report.n_lines))
          .field(run.report.total_power_w)
          .field(run.report.budget_w)
          .field(run.report.utilization)
          .field(static_cast<long long>(run.report.feasible ? 1 : 0))
          .field(static_cast<long long>(run.report.total_bias_lines));
      csv.end_row();
      Json entry = Json::object();
      entry[sweep.key] = value;
      entry.update(run.json);
      all.push_back(std::move(entry));
      ctx.out << sweep.key << "=" << sweep_cell(value) << "\n";
      print_budget(ctx.out, run);
    }
    stage.write("sweep.csv", csv.str());
    stage.write("budget.json", all.dump(2) + "\n");
    stage.commit();
    return kExitOk;
  }

  const auto run = run_budget(doc);
  stage.write("budget.json", run.json.dump(2) + "\n");
  stage.commit();
  print_budget(ctx.out, run);
  return kExitOk;
}

}  // namespace cryochain::app
