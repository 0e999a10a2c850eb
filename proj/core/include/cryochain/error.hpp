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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cryochain {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, violated preconditions, invalid configs.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// Parse failure carrying the 1-based line number it occurred on.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& detail,
             const std::string& source = {});
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Resampling was asked to leave the span of the source data.
class ExtrapolationError : public InputError {
 public:
  using InputError::InputError;
};

/// The inputs were well formed but the physics or numerics failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// S→T conversion hit |S21| = 0.
class SingularNetworkError : public NumericalError {
 public:
  SingularNetworkError(double frequency_hz, const std::string& what);
  double frequency_hz() const noexcept { return frequency_hz_; }

 private:
  double frequency_hz_;
};

/// A zero-gain element makes later noise contributions unbounded.
class InfiniteReferredNoiseError : public NumericalError {
 public:
  InfiniteReferredNoiseError(std::string element, double frequency_hz);
  const std::string& element() const noexcept { return element_; }
  double frequency_hz() const noexcept { return frequency_hz_; }

 private:
  std::string element_;
  double frequency_hz_;
};

/// A noise measurement that cannot be inverted; value() is the offending
/// intermediate (Y for "no excess noise", the computed Te otherwise).
class MeasurementError : public NumericalError {
 public:
  MeasurementError(double value, const std::string& what)
      : NumericalError(what), value_(value) {}
  double value() const noexcept { return value_; }

 private:
  double value_;
};

class NoExcessNoiseError : public MeasurementError {
 public:
  using MeasurementError::MeasurementError;
};

class NonphysicalMeasurementError : public MeasurementError {
 public:
  using MeasurementError::MeasurementError;
};

/// De-embedding produced a negative DUT noise temperature.
class OvercorrectedDeembedError : public NumericalError {
 public:
  OvercorrectedDeembedError(double te_dut, double te_sys, double te_input,
                            double gain_input, double backend_term);

  double te_dut;
  double te_sys;
  double te_input;
  double gain_input;
  double backend_term;
};

/// The two IQ blob centers coincide so no discrimination axis exists.
class DegenerateBlobsError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace cryochain
