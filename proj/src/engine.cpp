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

#include "qnoise/engine.hpp"

#include <cmath>
#include <string>

#include "qnoise/detail/kernels.hpp"
#include "qnoise/errors.hpp"
#include "qnoise/parallel.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

namespace {

using detail::apply_cost_inplace;
using detail::apply_mixer_inplace;
using detail::apply_op_inplace;
using detail::left_multiply_inplace;
using detail::mixer_rotation;
using detail::right_multiply_adjoint_inplace;

void check_qubit(int qubit, int n) {
  if (qubit < 0 || qubit >= n) {
    throw ValidationError("qubit index " + std::to_string(qubit) + " out of range");
  }
}

void check_dims(std::int64_t have, std::int64_t want, const char* what) {
  if (have != want) {
    throw ValidationError(std::string(what) + ": dimension mismatch (" + std::to_string(have) +
                          " vs " + std::to_string(want) + ")");
  }
}

void check_density_cap(int n_qubits) {
  if (n_qubits > kMaxDensityQubits) {
    throw ResourceError("density-matrix engine capped at " + std::to_string(kMaxDensityQubits) +
                        " qubits, got n=" + std::to_string(n_qubits));
  }
}

}  // namespace

PureState plus_state(int n_qubits) {
  if (n_qubits < 1) throw ValidationError("n_qubits must be >= 1");
  if (n_qubits > kMaxStateQubits) {
    throw ResourceError("pure-state engine capped at " + std::to_string(kMaxStateQubits) +
                        " qubits, got n=" + std::to_string(n_qubits));
  }
  PureState state;
  state.n_qubits = n_qubits;
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  state.amplitudes = Eigen::VectorXcd::Constant(dim, cxd(std::pow(2.0, -0.5 * n_qubits), 0.0));
  return state;
}

PureState apply_cost_layer(PureState state, const std::vector<double>& diag, double gamma) {
  check_dims(static_cast<std::int64_t>(diag.size()), state.dim(), "apply_cost_layer");
  apply_cost_inplace(state.amplitudes, diag, gamma);
  return state;
}

PureState apply_mixer_layer(PureState state, double beta) {
  apply_mixer_inplace(state.amplitudes, state.n_qubits, beta);
  return state;
}

PureState apply_single_qubit(PureState state, const Eigen::Matrix2cd& op, int qubit) {
  check_qubit(qubit, state.n_qubits);
  apply_op_inplace(state.amplitudes, op, qubit);
  return state;
}

PureState qaoa_state(const std::vector<double>& diag, int n_qubits, const AngleSchedule& angles) {
  validate(angles);
  PureState state = plus_state(n_qubits);
  check_dims(static_cast<std::int64_t>(diag.size()), state.dim(), "qaoa_state");
  for (int k = 0; k < angles.depth(); ++k) {
    apply_cost_inplace(state.amplitudes, diag, angles.gammas[k]);
    apply_mixer_inplace(state.amplitudes, n_qubits, angles.betas[k]);
  }
  return state;
}

PureState qaoa_state(const IsingInstance& instance, const AngleSchedule& angles) {
  return qaoa_state(diagonal(instance), instance.n_qubits, angles);
}

double expected_cost_pure(const PureState& state, const std::vector<double>& diag) {
  check_dims(static_cast<std::int64_t>(diag.size()), state.dim(), "expected_cost_pure");
  double cost = 0.0;
  for (std::int64_t z = 0; z < state.dim(); ++z) {
    cost += std::norm(state.amplitudes[z]) * diag[z];
  }
  return cost;
}

DensityMatrix apply_local_channel(DensityMatrix rho, const NoiseModel& noise, int qubit) {
  check_qubit(qubit, rho.n_qubits);
  const double p = noise.p;
  if (p == 0.0 || noise.kraus.empty()) return rho;
  const double weight = p / noise.kraus_count();
  Eigen::MatrixXcd out = (1.0 - p) * rho.matrix;
  for (const auto& k : noise.kraus) {
    Eigen::MatrixXcd term = rho.matrix;
    left_multiply_inplace(term, k, qubit);
    right_multiply_adjoint_inplace(term, k, qubit);
    out.noalias() += weight * term;
  }
  rho.matrix = std::move(out);
  return rho;
}

DensityMatrix apply_round(DensityMatrix rho, const std::vector<double>& diag, double gamma,
                          double beta) {
  check_dims(static_cast<std::int64_t>(diag.size()), rho.dim(), "apply_round");
  // Cost phases act elementwise: rho_zw *= exp(-i gamma (diag_z - diag_w)).
  for (std::int64_t col = 0; col < rho.dim(); ++col) {
    for (std::int64_t row = 0; row < rho.dim(); ++row) {
      rho.matrix(row, col) *= std::polar(1.0, -gamma * (diag[row] - diag[col]));
    }
  }
  const Eigen::Matrix2cd rot = mixer_rotation(beta);
  for (int q = 0; q < rho.n_qubits; ++q) {
    left_multiply_inplace(rho.matrix, rot, q);
    right_multiply_adjoint_inplace(rho.matrix, rot, q);
  }
  return rho;
}

DensityMatrix noisy_state(const std::vector<double>& diag, int n_qubits,
                          const AngleSchedule& angles, const NoiseModel& noise) {
  validate(angles);
  check_density_cap(n_qubits);
  DensityMatrix rho = from_pure(plus_state(n_qubits));
  for (int k = 0; k < angles.depth(); ++k) {
    rho = apply_round(std::move(rho), diag, angles.gammas[k], angles.betas[k]);
    for (int q = 0; q < n_qubits; ++q) {
      rho = apply_local_channel(std::move(rho), noise, q);
    }
  }
  return rho;
}

DensityMatrix noisy_state(const IsingInstance& instance, const AngleSchedule& angles,
                          const NoiseModel& noise) {
  return noisy_state(diagonal(instance), instance.n_qubits, angles, noise);
}

double fidelity(const DensityMatrix& rho, const PureState& pure) {
  check_dims(pure.dim(), rho.dim(), "fidelity");
  const cxd value = pure.amplitudes.adjoint() * rho.matrix * pure.amplitudes;
  return value.real();
}

double expected_cost_dm(const DensityMatrix& rho, const std::vector<double>& diag) {
  check_dims(static_cast<std::int64_t>(diag.size()), rho.dim(), "expected_cost_dm");
  double cost = 0.0;
  for (std::int64_t z = 0; z < rho.dim(); ++z) {
    cost += diag[z] * rho.matrix(z, z).real();
  }
  return cost;
}

MonteCarloResult monte_carlo(const IsingInstance& instance, const AngleSchedule& angles,
                             const NoiseModel& noise, std::int64_t trials, std::uint64_t seed,
                             int jobs) {
  validate(angles);
  require_unitary_kraus(noise);
  if (trials < 1) throw ValidationError("trials must be >= 1");

  const std::vector<double> diag = diagonal(instance);
  const int n = instance.n_qubits;
  const PureState ideal = qaoa_state(diag, n, angles);
  const double p = noise.p;
  const int m_ops = noise.kraus_count();

  struct Sums {
    long double cost = 0, cost2 = 0, fid = 0, fid2 = 0;
  };

  auto run_chunk = [&](std::uint64_t begin, std::uint64_t end) {
    Sums sums;
    PureState state;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      Rng rng(derive_seed(seed, 0x7261, trial));
      state = plus_state(n);
      for (int k = 0; k < angles.depth(); ++k) {
        apply_cost_inplace(state.amplitudes, diag, angles.gammas[k]);
        apply_mixer_inplace(state.amplitudes, n, angles.betas[k]);
        for (int q = 0; q < n; ++q) {
          if (rng.uniform() < p) {
            const int j = static_cast<int>(rng.integer(m_ops));
            apply_op_inplace(state.amplitudes, noise.kraus[j], q);
          }
        }
      }
      const double cost = expected_cost_pure(state, diag);
      const double fid = std::norm(ideal.amplitudes.dot(state.amplitudes));
      sums.cost += cost;
      sums.cost2 += static_cast<long double>(cost) * cost;
      sums.fid += fid;
      sums.fid2 += static_cast<long double>(fid) * fid;
    }
    return sums;
  };

  const Sums total = chunked_reduce<Sums>(
      static_cast<std::uint64_t>(trials), 256, jobs, Sums{}, run_chunk,
      [](Sums& acc, Sums part) {
        acc.cost += part.cost;
        acc.cost2 += part.cost2;
        acc.fid += part.fid;
        acc.fid2 += part.fid2;
      });

  const long double t = static_cast<long double>(trials);
  MonteCarloResult result;
  result.trials = trials;
  result.cost_mean = static_cast<double>(total.cost / t);
  result.fidelity_mean = static_cast<double>(total.fid / t);
  if (trials > 1) {
    const long double cost_var =
        std::max(0.0L, (total.cost2 - total.cost * total.cost / t) / (t - 1));
    const long double fid_var = std::max(0.0L, (total.fid2 - total.fid * total.fid / t) / (t - 1));
    result.cost_stderr = static_cast<double>(std::sqrt(cost_var / t));
    result.fidelity_stderr = static_cast<double>(std::sqrt(fid_var / t));
  }
  return result;
}

}  // namespace qnoise
