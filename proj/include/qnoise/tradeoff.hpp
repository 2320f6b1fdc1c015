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

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qnoise/closedform.hpp"
#include "qnoise/engine.hpp"

namespace qnoise {

struct SweepRow {
  int depth = 0;
  double p = 0.0;
  double cost_exact = 0.0;
  double fidelity_exact = 0.0;
  std::optional<double> cost_model;
  std::optional<double> fidelity_model;
  std::string angle_source;
};

/// Per-depth fitted models used to fill the optional model columns.
struct DepthModels {
  std::optional<FidelityFit> fidelity;
  std::optional<CostFit> cost;
};

struct SweepTable {
  int n_qubits = 0;
  std::vector<SweepRow> rows;  // sorted by (depth, p), unique
  // Largest |model - exact| per depth, when models were supplied.
  std::map<int, double> max_cost_model_dev;
  std::map<int, double> max_fidelity_model_dev;
};

struct SweepOptions {
  int jobs = 1;
  std::string angle_source = "optimized-noiseless";
};

/// Exact cost/fidelity from the density-matrix engine on a (depth, p) grid,
/// with model columns evaluated at n_slots = N*d where fits are supplied.
/// The noise argument fixes the channel kind; its strength is overridden by
/// each grid point.
SweepTable sweep(const IsingInstance& instance, const std::vector<int>& depths,
                 const std::vector<double>& p_grid, const NoiseModel& noise,
                 const std::map<int, AngleSchedule>& angles,
                 const std::map<int, DepthModels>& models = {}, const SweepOptions& options = {});

/// Noise strengths where the exact cost curves of the two depths cross,
/// located by linear interpolation between adjacent grid points.
std::vector<double> find_crossings(const SweepTable& table, int depth_a, int depth_b);

/// Midpoints worth one refinement pass: where two crossings of a depth pair
/// fall within two grid steps of each other, midpoints of the bracketing
/// intervals are returned for re-evaluation on an enriched grid.
std::vector<double> refinement_points(const SweepTable& table,
                                      const std::vector<std::pair<int, int>>& depth_pairs);

struct DepthCostModel {
  int depth = 0;
  CostFit fit;
  double c_ideal = 0.0;  // noiseless cost at this depth's angles
};

/// Depth with the lowest modelled cost at noise strength p; ties break to
/// the smaller depth.
int optimal_depth(const std::vector<DepthCostModel>& models, int n_qubits, double p);

/// 51 uniform points on [0, 1] plus a fine prefix {0, 0.005, ..., 0.05}.
std::vector<double> default_p_grid();

/// CSV with header `d,p,cost_exact,fidelity_exact,cost_model,fidelity_model,
/// angle_source`; absent model values are left empty.
void write_sweep_csv(const SweepTable& table, std::ostream& out);
void write_sweep_file(const SweepTable& table, const std::string& path);

/// CSV with header `d_a,d_b,p_star`.
void write_crossings_csv(const std::vector<std::tuple<int, int, double>>& crossings,
                         std::ostream& out);
void write_crossings_file(const std::vector<std::tuple<int, int, double>>& crossings,
                          const std::string& path);

}  // namespace qnoise
