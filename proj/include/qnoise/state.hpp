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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qnoise {

using cxd = std::complex<double>;

/// QAOA angle schedule: one (gamma, beta) pair per round.
struct AngleSchedule {
  std::vector<double> gammas;
  std::vector<double> betas;

  int depth() const { return static_cast<int>(gammas.size()); }
};

/// Throws ValidationError unless gammas and betas have equal length >= 1.
void validate(const AngleSchedule& angles);

/// Normalized amplitude vector over the 2^n computational basis states.
struct PureState {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  std::int64_t dim() const { return amplitudes.size(); }
};

/// 2^n x 2^n density operator.
struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd matrix;

  std::int64_t dim() const { return matrix.rows(); }
};

double norm_error(const PureState& state);           // | ||psi||^2 - 1 |
void check_state(const PureState& state, double tol = 1e-9);

DensityMatrix from_pure(const PureState& state);

double hermiticity_error(const DensityMatrix& rho);  // max |rho - rho^dag|
double trace_error(const DensityMatrix& rho);        // | tr(rho) - 1 |
double min_eigenvalue(const DensityMatrix& rho);
void check_density_matrix(const DensityMatrix& rho, double tol = 1e-9,
                          double eigenvalue_floor = -1e-8);

/// Half the sum of singular values of (a - b).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qnoise
