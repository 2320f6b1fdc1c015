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

#include "qnoise/state.hpp"

#include <cmath>
#include <string>

#include "qnoise/errors.hpp"

namespace qnoise {

void validate(const AngleSchedule& angles) {
  if (angles.gammas.empty()) {
    throw ValidationError("angle schedule must have depth >= 1");
  }
  if (angles.gammas.size() != angles.betas.size()) {
    throw ValidationError("gammas and betas must have equal length, got " +
                          std::to_string(angles.gammas.size()) + " vs " +
                          std::to_string(angles.betas.size()));
  }
}

double norm_error(const PureState& state) {
  return std::abs(state.amplitudes.squaredNorm() - 1.0);
}

void check_state(const PureState& state, double tol) {
  if (state.n_qubits < 1 || state.dim() != (std::int64_t{1} << state.n_qubits)) {
    throw ValidationError("state dimension does not match qubit count");
  }
  if (norm_error(state) > tol) {
    throw ValidationError("state is not normalized (|norm^2 - 1| = " +
                          std::to_string(norm_error(state)) + ")");
  }
}

DensityMatrix from_pure(const PureState& state) {
  check_state(state);
  DensityMatrix rho;
  rho.n_qubits = state.n_qubits;
  rho.matrix = state.amplitudes * state.amplitudes.adjoint();
  return rho;
}

double hermiticity_error(const DensityMatrix& rho) {
  return (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
}

double trace_error(const DensityMatrix& rho) { return std::abs(rho.matrix.trace() - cxd(1.0)); }

double min_eigenvalue(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (rho.matrix + rho.matrix.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void check_density_matrix(const DensityMatrix& rho, double tol, double eigenvalue_floor) {
  if (rho.n_qubits < 1 || rho.matrix.rows() != rho.matrix.cols() ||
      rho.dim() != (std::int64_t{1} << rho.n_qubits)) {
    throw ValidationError("density matrix dimension does not match qubit count");
  }
  if (hermiticity_error(rho) > tol) {
    throw ValidationError("density matrix is not Hermitian");
  }
  if (trace_error(rho) > tol) {
    throw ValidationError("density matrix trace differs from 1");
  }
  if (min_eigenvalue(rho) < eigenvalue_floor) {
    throw ValidationError("density matrix has a significantly negative eigenvalue");
  }
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.matrix.rows() != b.matrix.rows()) {
    throw ValidationError("trace_distance: dimension mismatch");
  }
  // The difference of two Hermitian operators is Hermitian, so the singular
  // values are the absolute eigenvalues.
  Eigen::MatrixXcd diff = a.matrix - b.matrix;
  diff = 0.5 * (diff + diff.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace qnoise
