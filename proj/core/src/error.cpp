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
#include "cryochain/error.hpp"

#include "cryochain/format.hpp"

namespace cryochain {

ParseError::ParseError(std::size_t line, const std::string& detail,
                       const std::string& source)
    : InputError((source.empty() ? "line " : source + ":") +
                 std::to_string(line) + ": " + detail),
      line_(line),
      detail_(detail) {}

SingularNetworkError::SingularNetworkError(double frequency_hz,
                                           const std::string& what)
    : NumericalError(what + " at " + format_sig(frequency_hz) + " Hz"),
      frequency_hz_(frequency_hz) {}

InfiniteReferredNoiseError::InfiniteReferredNoiseError(std::string element,
                                                       double frequency_hz)
    : NumericalError("infinite referred noise: element '" + element +
                     "' has zero gain at " + format_sig(frequency_hz) +
                     " Hz and precedes later elements"),
      element_(std::move(element)),
      frequency_hz_(frequency_hz) {}

OvercorrectedDeembedError::OvercorrectedDeembedError(double te_dut_,
                                                     double te_sys_,
                                                     double te_input_,
                                                     double gain_input_,
                                                     double backend_term_)
    : NumericalError("overcorrected de-embed: Te_dut = " + format_sig(te_dut_) +
                     " K (Te_sys = " + format_sig(te_sys_) +
                     " K, Te_in = " + format_sig(te_input_) +
                     " K, G_in = " + format_sig(gain_input_) +
                     ", backend term = " + format_sig(backend_term_) + " K)"),
      te_dut(te_dut_),
      te_sys(te_sys_),
      te_input(te_input_),
      gain_input(gain_input_),
      backend_term(backend_term_) {}

}  // namespace cryochain
