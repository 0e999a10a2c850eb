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
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "cryochain/readout.hpp"
#include "cryochain/rfnet.hpp"
#include "cryochain/rng.hpp"
#include "cryochain/touchstone.hpp"

namespace {

using namespace cryochain;

rfnet::SignalChain wiring_chain() {
  using namespace rfnet;
  return SignalChain({ChainElement("att_mxc", Attenuator{20.0, 0.02}),
                      ChainElement("cable_4k", Cable{3.0, 0.02, 4.0, DistributedProfile{64}}),
                      ChainElement("lna", Amplifier{40.0, 5.0}),
                      ChainElement("cable_rt", Cable{6.0, 4.0, 296.0, DistributedProfile{64}}),
                      ChainElement("backend", Amplifier{30.0, 300.0})});
}

void BM_CascadeNoise(benchmark::State& state) {
  const auto chain = wiring_chain();
  const auto grid = rfnet::FrequencyGrid::linspace(4e9, 8e9, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rfnet::cascade_noise(chain, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CascadeNoise)->Arg(16)->Arg(1024);

std::string s2p_text(int points) {
  std::string text = "! benchmark\n# GHz S MA R 50\n";
  for (int k = 0; k < points; ++k) {
    text += std::to_string(1.0 + 0.001 * k) + " 0.1 12.5 31.6 -45.2 0.001 80.1 0.2 -170.3\n";
  }
  return text;
}

void BM_ParseTouchstone(benchmark::State& state) {
  const std::string text = s2p_text(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(touchstone::parse_touchstone(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseTouchstone)->Arg(1001);

void BM_WriteTouchstone(benchmark::State& state) {
  const auto doc = touchstone::parse_touchstone(s2p_text(1001));
  for (auto _ : state) {
    benchmark::DoNotOptimize(touchstone::write_touchstone(doc, touchstone::DataFormat::DB));
  }
}
BENCHMARK(BM_WriteTouchstone);

void BM_Philox(benchmark::State& state) {
  const rng::CounterRng gen(42);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen.block(i++, 0));
}
BENCHMARK(BM_Philox);

void BM_SimulateShots(benchmark::State& state) {
  const readout::ResonatorModel r(7e9, 1e6, 5e5);
  readout::ReadoutConfig cfg;
  cfg.probe_freq_hz = 7e9;
  cfg.p_in_w = 1e-15;
  cfg.t_sys_k = 5.0;
  readout::ShotOptions opt;
  opt.workers = static_cast<unsigned>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(readout::simulate_shots(cfg, r, n, 1, opt));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_SimulateShots)->Args({100000, 1})->Args({100000, 4})->Unit(benchmark::kMillisecond);

void BM_ClassifyAndConfusion(benchmark::State& state) {
  const readout::ResonatorModel r(7e9, 1e6, 5e5);
  readout::ReadoutConfig cfg;
  cfg.probe_freq_hz = 7e9;
  cfg.p_in_w = 1e-15;
  cfg.t_sys_k = 5.0;
  const auto shots = readout::simulate_shots(cfg, r, 100000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(readout::classify_and_confusion(shots));
}
BENCHMARK(BM_ClassifyAndConfusion)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
