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
//
// Independent dense-matrix oracles for the test suites. Everything here is
// built from explicit Kronecker products and eigendecompositions, on purpose
// sharing no code with the engine's strided kernels.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qnoise/ising.hpp"
#include "qnoise/rng.hpp"
#include "qnoise/state.hpp"

namespace qnoise::testing {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Embeds a single-qubit operator at bit position `qubit` (bit 0 = least
// significant bit of the basis index).
inline Eigen::MatrixXcd op_on_qubit(const Eigen::Matrix2cd& op, int qubit, int n_qubits) {
  const auto identity = [](int bits) {
    return Eigen::MatrixXcd::Identity(std::int64_t{1} << bits, std::int64_t{1} << bits);
  };
  return kron(identity(n_qubits - 1 - qubit), kron(op, identity(qubit)));
}

inline Eigen::Matrix2cd pauli(char which) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  const std::complex<double> i(0.0, 1.0);
  switch (which) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -i, i, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

// exp(-i beta sum_q X_q) through the eigendecomposition of the dense mixer
// Hamiltonian.
inline Eigen::MatrixXcd dense_mixer_unitary(int n_qubits, double beta) {
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  Eigen::MatrixXd hx = Eigen::MatrixXd::Zero(dim, dim);
  for (int q = 0; q < n_qubits; ++q) {
    hx += op_on_qubit(pauli('X'), q, n_qubits).real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hx);
  const Eigen::VectorXd evals = solver.eigenvalues();
  const Eigen::MatrixXd evecs = solver.eigenvectors();
  Eigen::VectorXcd phases(dim);
  for (std::int64_t k = 0; k < dim; ++k) {
    phases[k] = std::polar(1.0, -beta * evals[k]);
  }
  return evecs.cast<std::complex<double>>() * phases.asDiagonal() *
         evecs.transpose().cast<std::complex<double>>();
}

inline Eigen::MatrixXcd dense_cost_unitary(const std::vector<double>& diag, double gamma) {
  const std::int64_t dim = static_cast<std::int64_t>(diag.size());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t z = 0; z < dim; ++z) {
    u(z, z) = std::polar(1.0, -gamma * diag[z]);
  }
  return u;
}

// Term-by-term energy of one basis state, written against the instance
// definition rather than the library's diagonal routine.
inline double energy_of_bitstring(const IsingInstance& instance, std::uint64_t z) {
  std::vector<double> spins(instance.n_qubits);
  for (int i = 0; i < instance.n_qubits; ++i) {
    spins[i] = ((z >> i) & 1u) ? -1.0 : 1.0;
  }
  double energy = 0.0;
  for (const auto& [i, h] : instance.fields) energy += h * spins[i];
  for (const auto& [i, j, coupling] : instance.couplings) energy += coupling * spins[i] * spins[j];
  for (const auto& [subset, coeff] : instance.higher_order) {
    double term = coeff;
    for (int i : subset) term *= spins[i];
    energy += term;
  }
  return energy;
}

inline PureState random_state(int n_qubits, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x7273));
  PureState state;
  state.n_qubits = n_qubits;
  state.amplitudes.resize(std::int64_t{1} << n_qubits);
  for (std::int64_t z = 0; z < state.amplitudes.size(); ++z) {
    state.amplitudes[z] = std::complex<double>(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  state.amplitudes.normalize();
  return state;
}

// Random mixture of a few pure states: Hermitian, unit trace, PSD.
inline DensityMatrix random_density_matrix(int n_qubits, std::uint64_t seed) {
  const std::int64_t dim = std::int64_t{1} << n_qubits;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  const double weights[3] = {0.5, 0.3, 0.2};
  for (int k = 0; k < 3; ++k) {
    const PureState psi = random_state(n_qubits, seed * 31 + k);
    rho += weights[k] * (psi.amplitudes * psi.amplitudes.adjoint());
  }
  return DensityMatrix{n_qubits, std::move(rho)};
}

}  // namespace qnoise::testing
