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

#include "qnoise/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>

#include "qnoise/errors.hpp"
#include "qnoise/parallel.hpp"

namespace qnoise {

SweepTable sweep(const IsingInstance& instance, const std::vector<int>& depths,
                 const std::vector<double>& p_grid, const NoiseModel& noise,
                 const std::map<int, AngleSchedule>& angles,
                 const std::map<int, DepthModels>& models, const SweepOptions& options) {
  validate(instance);
  if (depths.empty()) throw ValidationError("sweep needs at least one depth");
  if (p_grid.empty()) throw ValidationError("sweep needs at least one grid point");
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p grid values must lie in [0, 1]");
  }

  std::vector<int> sorted_depths = depths;
  std::sort(sorted_depths.begin(), sorted_depths.end());
  sorted_depths.erase(std::unique(sorted_depths.begin(), sorted_depths.end()),
                      sorted_depths.end());
  std::vector<double> sorted_grid = p_grid;
  std::sort(sorted_grid.begin(), sorted_grid.end());
  sorted_grid.erase(std::unique(sorted_grid.begin(), sorted_grid.end()), sorted_grid.end());

  const std::vector<double> diag = diagonal(instance);
  const int n = instance.n_qubits;

  struct DepthContext {
    int depth;
    const AngleSchedule* angles;
    PureState ideal;
  };
  std::vector<DepthContext> contexts;
  for (int d : sorted_depths) {
    const auto it = angles.find(d);
    if (it == angles.end()) {
      throw ValidationError("no angle schedule supplied for depth " + std::to_string(d));
    }
    if (it->second.depth() != d) {
      throw ValidationError("angle schedule length does not match depth " + std::to_string(d));
    }
    contexts.push_back({d, &it->second, qaoa_state(diag, n, it->second)});
  }

  const std::uint64_t grid_size = sorted_grid.size();
  const std::uint64_t total = contexts.size() * grid_size;

  auto per_chunk = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<SweepRow> rows;
    for (std::uint64_t t = begin; t < end; ++t) {
      const DepthContext& ctx = contexts[t / grid_size];
      const double p = sorted_grid[t % grid_size];
      const DensityMatrix rho = noisy_state(diag, n, *ctx.angles, with_strength(noise, p));
      SweepRow row;
      row.depth = ctx.depth;
      row.p = p;
      row.cost_exact = expected_cost_dm(rho, diag);
      row.fidelity_exact = fidelity(rho, ctx.ideal);
      row.angle_source = options.angle_source;
      if (const auto it = models.find(ctx.depth); it != models.end()) {
        const int n_slots = n * ctx.depth;
        if (it->second.cost) row.cost_model = model_cost(*it->second.cost, n_slots, p);
        if (it->second.fidelity) {
          row.fidelity_model = model_fidelity(*it->second.fidelity, n_slots, p);
        }
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };

  SweepTable table;
  table.n_qubits = n;
  table.rows = chunked_reduce<std::vector<SweepRow>>(
      total, 4, options.jobs, {}, per_chunk, [](std::vector<SweepRow>& acc,
                                                std::vector<SweepRow> part) {
        for (auto& row : part) acc.push_back(std::move(row));
      });

  for (const SweepRow& row : table.rows) {
    if (row.cost_model) {
      double& dev = table.max_cost_model_dev[row.depth];
      dev = std::max(dev, std::abs(*row.cost_model - row.cost_exact));
    }
    if (row.fidelity_model) {
      double& dev = table.max_fidelity_model_dev[row.depth];
      dev = std::max(dev, std::abs(*row.fidelity_model - row.fidelity_exact));
    }
  }
  return table;
}

namespace {

// Common grid with per-depth exact costs for a pair of depths.
struct PairCurves {
  std::vector<double> p;
  std::vector<double> diff;  // cost(depth_a) - cost(depth_b)
};

PairCurves pair_curves(const SweepTable& table, int depth_a, int depth_b) {
  std::map<double, double> cost_a, cost_b;
  for (const SweepRow& row : table.rows) {
    if (row.depth == depth_a) cost_a[row.p] = row.cost_exact;
    if (row.depth == depth_b) cost_b[row.p] = row.cost_exact;
  }
  PairCurves curves;
  for (const auto& [p, ca] : cost_a) {
    const auto it = cost_b.find(p);
    if (it == cost_b.end()) continue;
    curves.p.push_back(p);
    curves.diff.push_back(ca - it->second);
  }
  if (curves.p.size() < 2) {
    throw ValidationError("depths " + std::to_string(depth_a) + " and " +
                          std::to_string(depth_b) + " share no usable p grid");
  }
  return curves;
}

}  // namespace

std::vector<double> find_crossings(const SweepTable& table, int depth_a, int depth_b) {
  const PairCurves curves = pair_curves(table, depth_a, depth_b);
  std::vector<double> crossings;

  std::size_t i = 0;
  while (i < curves.diff.size() && curves.diff[i] == 0.0) ++i;
  if (i == curves.diff.size()) return crossings;  // identical curves

  double prev = curves.diff[i];
  std::size_t prev_idx = i;
  for (std::size_t j = i + 1; j < curves.diff.size(); ++j) {
    const double d = curves.diff[j];
    if (d == 0.0) continue;
    if ((d > 0.0) != (prev > 0.0)) {
      if (j == prev_idx + 1) {
        const double p0 = curves.p[prev_idx];
        const double p1 = curves.p[j];
        crossings.push_back(p0 + (p1 - p0) * prev / (prev - d));
      } else {
        // The difference touched zero on the grid between the sign flips.
        crossings.push_back(curves.p[prev_idx + 1]);
      }
    }
    prev = d;
    prev_idx = j;
  }
  return crossings;
}

std::vector<double> refinement_points(const SweepTable& table,
                                      const std::vector<std::pair<int, int>>& depth_pairs) {
  std::set<double> points;
  for (const auto& [depth_a, depth_b] : depth_pairs) {
    const PairCurves curves = pair_curves(table, depth_a, depth_b);
    const std::vector<double> crossings = find_crossings(table, depth_a, depth_b);
    if (crossings.size() < 2) continue;
    // Grid step local to each crossing: refine when two crossings are
    // separated by fewer than two steps.
    for (std::size_t c = 0; c + 1 < crossings.size(); ++c) {
      const auto upper =
          std::upper_bound(curves.p.begin(), curves.p.end(), crossings[c]);
      if (upper == curves.p.end() || upper == curves.p.begin()) continue;
      const double step = *upper - *(upper - 1);
      if (crossings[c + 1] - crossings[c] < 2.0 * step) {
        for (double p_star : {crossings[c], crossings[c + 1]}) {
          const auto hi = std::upper_bound(curves.p.begin(), curves.p.end(), p_star);
          if (hi == curves.p.end() || hi == curves.p.begin()) continue;
          points.insert(0.5 * (*(hi - 1) + *hi));
        }
      }
    }
  }
  return {points.begin(), points.end()};
}

int optimal_depth(const std::vector<DepthCostModel>& models, int n_qubits, double p) {
  if (models.empty()) throw ValidationError("optimal_depth needs at least one depth");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");

  std::vector<DepthCostModel> sorted = models;
  std::sort(sorted.begin(), sorted.end(),
            [](const DepthCostModel& a, const DepthCostModel& b) { return a.depth < b.depth; });

  int best_depth = sorted.front().depth;
  double best_cost = std::numeric_limits<double>::infinity();
  for (const DepthCostModel& model : sorted) {
    const double rate = 1.0 - p * (model.fit.chi - 1.0) / model.fit.chi;
    const double cost =
        model.fit.alpha + (model.c_ideal - model.fit.alpha) * std::pow(rate, n_qubits * model.depth);
    if (cost < best_cost) {  // strict: ties stay with the smaller depth
      best_cost = cost;
      best_depth = model.depth;
    }
  }
  return best_depth;
}

std::vector<double> default_p_grid() {
  std::set<double> grid;
  for (int k = 0; k <= 50; ++k) grid.insert(static_cast<double>(k) / 50.0);
  for (int j = 0; j <= 10; ++j) grid.insert(static_cast<double>(j) / 200.0);
  return {grid.begin(), grid.end()};
}

namespace {

// Shortest representation that round-trips exactly.
std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace

void write_sweep_csv(const SweepTable& table, std::ostream& out) {
  out << "d,p,cost_exact,fidelity_exact,cost_model,fidelity_model,angle_source\n";
  for (const SweepRow& row : table.rows) {
    out << row.depth << ',' << format_double(row.p) << ',' << format_double(row.cost_exact)
        << ',' << format_double(row.fidelity_exact) << ',';
    if (row.cost_model) out << format_double(*row.cost_model);
    out << ',';
    if (row.fidelity_model) out << format_double(*row.fidelity_model);
    out << ',' << row.angle_source << '\n';
  }
}

void write_sweep_file(const SweepTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_sweep_csv(table, out);
}

void write_crossings_csv(const std::vector<std::tuple<int, int, double>>& crossings,
                         std::ostream& out) {
  out << "d_a,d_b,p_star\n";
  for (const auto& [depth_a, depth_b, p_star] : crossings) {
    out << depth_a << ',' << depth_b << ',' << format_double(p_star) << '\n';
  }
}

void write_crossings_file(const std::vector<std::tuple<int, int, double>>& crossings,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_crossings_csv(crossings, out);
}

}  // namespace qnoise
