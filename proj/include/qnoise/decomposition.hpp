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
#include <iosfwd>
#include <optional>
#include <vector>

#include "qnoise/engine.hpp"

namespace qnoise {

/// One noise insertion: Kraus operator `kraus` applied to `qubit` after
/// round `layer`. Layers are 1-based round numbers; kraus indexes the noise
/// model's operator list (0 is the identity for the built-in channels).
struct PatternEntry {
  int layer = 1;
  int qubit = 0;
  int kraus = 0;
};

/// A set of insertions with distinct (layer, qubit) slots, canonically
/// sorted by (layer, qubit).
struct NoisePattern {
  std::vector<PatternEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

/// Validates ranges and slot distinctness, and sorts entries canonically.
NoisePattern make_pattern(std::vector<PatternEntry> entries, int n_qubits, int depth,
                          int kraus_count);

/// Number of insertion patterns with exactly m insertions over N*d slots and
/// M operator choices: M^m * binomial(N*d, m). Returns nullopt when the
/// count overflows 64 bits (callers switch to sampling).
std::optional<std::uint64_t> pattern_count(int n_qubits, int depth, int m, int kraus_count);

/// Pure state obtained by interleaving the pattern's Kraus insertions with
/// the circuit rounds. Requires unitary Kraus operators.
PureState trajectory_state(const IsingInstance& instance, const AngleSchedule& angles,
                           const NoiseModel& noise, const NoisePattern& pattern);

/// Mean value at each insertion count m in [0, N*d].
struct MLevel {
  double mean = 0.0;
  std::uint64_t samples = 0;
  bool exact = false;
};

struct MLevelCurve {
  int n_slots = 0;
  std::vector<MLevel> levels;  // size n_slots + 1
};

struct CurveOptions {
  std::uint64_t budget_per_m = 2000;  // exact enumeration when count <= budget
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Mean squared overlap with the ideal output, per insertion count m.
/// Exact when the level's pattern count fits the budget, otherwise a mean
/// over budget_per_m patterns drawn uniformly (seed-deterministic).
MLevelCurve f_curve(const IsingInstance& instance, const AngleSchedule& angles,
                    const NoiseModel& noise, const CurveOptions& options = {});

/// Mean cost expectation per insertion count m; same sampling rules.
MLevelCurve c_curve(const IsingInstance& instance, const AngleSchedule& angles,
                    const NoiseModel& noise, const CurveOptions& options = {});

/// Both curves from a single pass over the patterns.
struct MLevelCurves {
  MLevelCurve fidelity;
  MLevelCurve cost;
};
MLevelCurves mlevel_curves(const IsingInstance& instance, const AngleSchedule& angles,
                           const NoiseModel& noise, const CurveOptions& options = {});

/// Unweighted per-level sums of trajectory projectors sum |psi><psi|.
/// The noisy state at any strength p is a weighted combination of these,
/// which makes multi-p checks cheap.
struct PatternSums {
  int n_qubits = 0;
  int n_slots = 0;
  int kraus_count = 0;
  std::vector<Eigen::MatrixXcd> per_m;  // size n_slots + 1
};

PatternSums pattern_sums(const IsingInstance& instance, const AngleSchedule& angles,
                         const NoiseModel& noise, std::uint64_t max_terms, int jobs = 1);

DensityMatrix assemble_from_sums(const PatternSums& sums, double p);

/// Full pattern-sum reconstruction of the noisy state:
///   sum_m (1-p)^(Nd-m) (p/M)^m sum_patterns |psi><psi|.
/// Requires the total pattern count to fit max_terms (ResourceError).
DensityMatrix assemble_density_matrix(const IsingInstance& instance, const AngleSchedule& angles,
                                      const NoiseModel& noise, std::uint64_t max_terms,
                                      int jobs = 1);

/// Binomial recombination of an exact curve:
///   sum_m binomial(n,m) (1-p)^(n-m) p^m mean_m.
/// Every level must be exact (ValidationError otherwise). For unitary Kraus
/// sets this reproduces the density-matrix engine value.
double reconstruct_fidelity(const MLevelCurve& curve, double p);
double reconstruct_cost(const MLevelCurve& curve, double p);

/// CSV with header `m,mean,samples,exact`.
void write_curve_csv(const MLevelCurve& curve, std::ostream& out);
void write_curve_file(const MLevelCurve& curve, const std::string& path);

}  // namespace qnoise
