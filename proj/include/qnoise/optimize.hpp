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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qnoise/engine.hpp"

namespace qnoise {

using CostFunction = std::function<double(const AngleSchedule&)>;

/// Expected cost as a function of angles: the pure-state engine when no
/// noise is given, the density-matrix engine otherwise. Deterministic.
CostFunction objective(const IsingInstance& instance, const std::optional<NoiseModel>& noise,
                       int depth);

/// Central differences per coordinate.
std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, const std::vector<double>& x,
    double step);

// Flat parameter layout: [gamma_1..gamma_d, beta_1..beta_d].
std::vector<double> angles_to_vector(const AngleSchedule& angles);
AngleSchedule vector_to_angles(const std::vector<double>& x);

struct OptimizeOptions {
  int restarts = 20;
  std::uint64_t seed = 0;
  int max_iterations = 500;
  double gradient_tol = 1e-8;
  double fd_step = 1e-6;
  int jobs = 1;
};

struct OptimizationReport {
  AngleSchedule best_angles;
  double best_cost = 0.0;
  std::vector<double> restart_costs;  // final cost per restart, in restart order
  std::int64_t evaluations = 0;       // total objective evaluations
  bool all_converged = true;          // false if any restart hit the iteration cap
};

/// Multi-restart quasi-Newton (BFGS) minimization with finite-difference
/// gradients. Each restart draws 2d angles uniformly from [0, 2pi),
/// seed-deterministic and independent of execution order. Reported angles
/// are wrapped into [0, 2pi) and best_cost is the objective at the reported
/// angles.
OptimizationReport optimize_angles(const IsingInstance& instance, int depth,
                                   const std::optional<NoiseModel>& noise,
                                   const OptimizeOptions& options = {});

void write_report_json(const OptimizationReport& report, std::ostream& out);
void write_report_file(const OptimizationReport& report, const std::string& path);

}  // namespace qnoise
