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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qnoise::detail {

using cxd = std::complex<double>;

// Single-qubit operator on a state vector, in place.
inline void apply_op_inplace(Eigen::VectorXcd& amp, const Eigen::Matrix2cd& op, int qubit) {
  const std::int64_t dim = amp.size();
  const std::int64_t stride = std::int64_t{1} << qubit;
  const cxd m00 = op(0, 0), m01 = op(0, 1), m10 = op(1, 0), m11 = op(1, 1);
  for (std::int64_t base = 0; base < dim; base += 2 * stride) {
    for (std::int64_t offset = 0; offset < stride; ++offset) {
      const std::int64_t i0 = base + offset;
      const std::int64_t i1 = i0 + stride;
      const cxd a = amp[i0];
      const cxd b = amp[i1];
      amp[i0] = m00 * a + m01 * b;
      amp[i1] = m10 * a + m11 * b;
    }
  }
}

inline void apply_cost_inplace(Eigen::VectorXcd& amp, const std::vector<double>& diag,
                               double gamma) {
  for (std::int64_t z = 0; z < amp.size(); ++z) {
    amp[z] *= std::polar(1.0, -gamma * diag[z]);
  }
}

// exp(-i beta X) = cos(beta) I - i sin(beta) X on a single qubit.
inline Eigen::Matrix2cd mixer_rotation(double beta) {
  Eigen::Matrix2cd rot;
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  rot << cxd(c, 0), cxd(0, -s), cxd(0, -s), cxd(c, 0);
  return rot;
}

inline void apply_mixer_inplace(Eigen::VectorXcd& amp, int n_qubits, double beta) {
  const Eigen::Matrix2cd rot = mixer_rotation(beta);
  for (int q = 0; q < n_qubits; ++q) apply_op_inplace(amp, rot, q);
}

// rho -> (op on qubit) * rho.
inline void left_multiply_inplace(Eigen::MatrixXcd& rho, const Eigen::Matrix2cd& op, int qubit) {
  const std::int64_t dim = rho.rows();
  const std::int64_t stride = std::int64_t{1} << qubit;
  const cxd m00 = op(0, 0), m01 = op(0, 1), m10 = op(1, 0), m11 = op(1, 1);
  for (std::int64_t col = 0; col < dim; ++col) {
    for (std::int64_t base = 0; base < dim; base += 2 * stride) {
      for (std::int64_t offset = 0; offset < stride; ++offset) {
        const std::int64_t i0 = base + offset;
        const std::int64_t i1 = i0 + stride;
        const cxd a = rho(i0, col);
        const cxd b = rho(i1, col);
        rho(i0, col) = m00 * a + m01 * b;
        rho(i1, col) = m10 * a + m11 * b;
      }
    }
  }
}

// rho -> rho * (op on qubit)^dag.
inline void right_multiply_adjoint_inplace(Eigen::MatrixXcd& rho, const Eigen::Matrix2cd& op,
                                           int qubit) {
  const std::int64_t dim = rho.rows();
  const std::int64_t stride = std::int64_t{1} << qubit;
  const cxd c00 = std::conj(op(0, 0)), c01 = std::conj(op(0, 1));
  const cxd c10 = std::conj(op(1, 0)), c11 = std::conj(op(1, 1));
  for (std::int64_t base = 0; base < dim; base += 2 * stride) {
    for (std::int64_t offset = 0; offset < stride; ++offset) {
      const std::int64_t j0 = base + offset;
      const std::int64_t j1 = j0 + stride;
      for (std::int64_t row = 0; row < dim; ++row) {
        const cxd a = rho(row, j0);
        const cxd b = rho(row, j1);
        rho(row, j0) = a * c00 + b * c01;
        rho(row, j1) = a * c10 + b * c11;
      }
    }
  }
}

}  // namespace qnoise::detail
