// Copyright 2026 The qnoise authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qnoise {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments, malformed inputs, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A requested computation exceeds a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The requested operation needs a noise model property that does not hold
/// (e.g. pure-state trajectories require unitary Kraus operators).
class UnsupportedModelError : public Error {
 public:
  using Error::Error;
};

/// Nonlinear fit failed to converge; carries the best iterate found.
class FitError : public Error {
 public:
  FitError(const std::string& message, std::vector<double> best_params, double best_residual)
      : Error(message), best_params(std::move(best_params)), best_residual(best_residual) {}

  std::vector<double> best_params;
  double best_residual;
};

}  // namespace qnoise
