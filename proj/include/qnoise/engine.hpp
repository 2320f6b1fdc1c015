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

#include "qnoise/ising.hpp"
#include "qnoise/noise.hpp"
#include "qnoise/state.hpp"

namespace qnoise {

inline constexpr int kMaxStateQubits = 24;    // pure-state engine cap
inline constexpr int kMaxDensityQubits = 12;  // density-matrix engine cap

/// Equal superposition |+>^n.
PureState plus_state(int n_qubits);

/// Multiplies amplitude z by exp(-i * gamma * diag[z]).
PureState apply_cost_layer(PureState state, const std::vector<double>& diag, double gamma);

/// Applies exp(-i * beta * X) = cos(beta) I - i sin(beta) X to every qubit.
PureState apply_mixer_layer(PureState state, double beta);

/// Applies a single-qubit operator to one qubit of the state vector.
PureState apply_single_qubit(PureState state, const Eigen::Matrix2cd& op, int qubit);

/// Ideal circuit output: d alternating cost/mixer layers on |+>^n.
PureState qaoa_state(const IsingInstance& instance, const AngleSchedule& angles);
PureState qaoa_state(const std::vector<double>& diag, int n_qubits, const AngleSchedule& angles);

/// sum_z |amp_z|^2 diag[z].
double expected_cost_pure(const PureState& state, const std::vector<double>& diag);

/// rho -> (1-p) rho + (p/M) sum_j K_j rho K_j^dag on one qubit.
DensityMatrix apply_local_channel(DensityMatrix rho, const NoiseModel& noise, int qubit);

/// One unitary round (cost then mixer) conjugated onto the density matrix.
DensityMatrix apply_round(DensityMatrix rho, const std::vector<double>& diag, double gamma,
                          double beta);

/// d repetitions of (unitary round, then the local channel on every qubit in
/// index order) starting from |+><+|.
DensityMatrix noisy_state(const IsingInstance& instance, const AngleSchedule& angles,
                          const NoiseModel& noise);
DensityMatrix noisy_state(const std::vector<double>& diag, int n_qubits,
                          const AngleSchedule& angles, const NoiseModel& noise);

/// <psi| rho |psi>.
double fidelity(const DensityMatrix& rho, const PureState& pure);

/// sum_z diag[z] * Re(rho_zz).
double expected_cost_dm(const DensityMatrix& rho, const std::vector<double>& diag);

struct MonteCarloResult {
  double cost_mean = 0.0;
  double fidelity_mean = 0.0;
  double cost_stderr = 0.0;
  double fidelity_stderr = 0.0;
  std::int64_t trials = 0;
};

/// Trajectory sampler: per (round, qubit) slot, nothing happens with
/// probability 1-p, otherwise a uniformly chosen Kraus operator is applied.
/// Requires unitary Kraus operators. Deterministic for a fixed seed and
/// independent of evaluation order (per-trial RNG streams).
MonteCarloResult monte_carlo(const IsingInstance& instance, const AngleSchedule& angles,
                             const NoiseModel& noise, std::int64_t trials, std::uint64_t seed,
                             int jobs = 1);

}  // namespace qnoise
