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

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qnoise/engine.hpp"

namespace qnoise {

enum class VerifyLevel { fast, full };

VerifyLevel verify_level_from_string(std::string_view name);

struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed deviation
  double tolerance = 0.0;
  std::string detail;
};

/// Override points for the engine side of the cross-checks. Tests inject
/// faults here to prove the checks actually detect disagreement.
struct VerifyHooks {
  std::function<DensityMatrix(const IsingInstance&, const AngleSchedule&, const NoiseModel&)>
      noisy_state;
};

/// Runs the cross-engine equivalence suites: closed single-qubit laws,
/// pattern-sum reconstruction vs. the density-matrix engine, binomial
/// recombination of exact level curves, limiting-value checks, and Monte
/// Carlo consistency. `fast` stays at 4 qubits; `full` adds 6- and 8-qubit
/// checks and a deeper Monte Carlo run.
std::vector<CheckResult> run_verification(VerifyLevel level, int jobs = 1,
                                          const VerifyHooks& hooks = {});

bool all_passed(const std::vector<CheckResult>& results);

void write_verify_report_json(const std::vector<CheckResult>& results, std::ostream& out);
void write_verify_report_file(const std::vector<CheckResult>& results, const std::string& path);

}  // namespace qnoise
