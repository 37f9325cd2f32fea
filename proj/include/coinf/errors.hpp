// Copyright 2026 The coinf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COINF_ERRORS_HPP_
#define COINF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace coinf {

/// A parameter value lies outside the model's admissible domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called where its mathematical premise does not hold
/// (absent threshold, nullcline pole, inverse change of variables with V > I).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or incomplete key-value configuration. `line()` is 0 when the
/// problem is not tied to a single line (e.g. a missing key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// The integrator could not advance: step size underflow, step budget
/// exhausted, or a state component went clearly negative.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double time_reached)
      : std::runtime_error(what), time_reached_(time_reached) {}
  double time_reached() const noexcept { return time_reached_; }

 private:
  double time_reached_;
};

/// Step-size underflow; the usual symptom of stiffness for an explicit method.
class StiffnessError : public IntegrationError {
 public:
  using IntegrationError::IntegrationError;
};

/// Invalid sweep specification.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace coinf

#endif  // COINF_ERRORS_HPP_
