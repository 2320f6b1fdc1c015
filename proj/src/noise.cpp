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

#include "qnoise/noise.hpp"

#include <complex>
#include <string>

#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

const std::complex<double> kI(0.0, 1.0);

Eigen::Matrix2cd pauli_i() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, -kI, kI, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

void check_strength(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("noise strength p must lie in [0, 1], got " + std::to_string(p));
  }
}

void check_trace_preserving(const std::vector<Eigen::Matrix2cd>& kraus, double tol = 1e-9) {
  if (kraus.empty()) throw ValidationError("noise model needs at least one Kraus operator");
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& k : kraus) sum += k.adjoint() * k;
  const double m = static_cast<double>(kraus.size());
  if ((sum - m * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > tol) {
    throw ValidationError("Kraus set violates sum K^dag K = M * I");
  }
}

}  // namespace

NoiseKind noise_kind_from_string(std::string_view name) {
  if (name == "depolarizing") return NoiseKind::depolarizing;
  if (name == "dephasing") return NoiseKind::dephasing;
  throw ValidationError("unknown noise kind '" + std::string(name) +
                        "' (expected depolarizing or dephasing)");
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::depolarizing:
      return "depolarizing";
    case NoiseKind::dephasing:
      return "dephasing";
    case NoiseKind::custom:
      return "custom";
  }
  throw ValidationError("invalid noise kind value");
}

NoiseModel depolarizing(double p) {
  check_strength(p);
  return NoiseModel{NoiseKind::depolarizing, p, {pauli_i(), pauli_x(), pauli_y(), pauli_z()}};
}

NoiseModel dephasing(double p) {
  check_strength(p);
  return NoiseModel{NoiseKind::dephasing, p, {pauli_i(), pauli_z()}};
}

NoiseModel make_noise(NoiseKind kind, double p) {
  switch (kind) {
    case NoiseKind::depolarizing:
      return depolarizing(p);
    case NoiseKind::dephasing:
      return dephasing(p);
    case NoiseKind::custom:
      throw ValidationError("custom noise requires an explicit Kraus set");
  }
  throw ValidationError("invalid noise kind value");
}

NoiseModel custom_channel(double p, std::vector<Eigen::Matrix2cd> kraus) {
  check_strength(p);
  check_trace_preserving(kraus);
  return NoiseModel{NoiseKind::custom, p, std::move(kraus)};
}

NoiseModel with_strength(const NoiseModel& noise, double p) {
  check_strength(p);
  NoiseModel out = noise;
  out.p = p;
  return out;
}

bool has_unitary_kraus(const NoiseModel& noise, double tol) {
  for (const auto& k : noise.kraus) {
    if ((k.adjoint() * k - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > tol) {
      return false;
    }
  }
  return !noise.kraus.empty();
}

void require_unitary_kraus(const NoiseModel& noise) {
  if (!has_unitary_kraus(noise)) {
    throw UnsupportedModelError(
        "operation requires unitary Kraus operators (built-in depolarizing/dephasing qualify)");
  }
}

}  // namespace qnoise
