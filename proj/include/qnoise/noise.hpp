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

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qnoise {

enum class NoiseKind { depolarizing, dephasing, custom };

NoiseKind noise_kind_from_string(std::string_view name);
std::string to_string(NoiseKind kind);

/// Single-qubit channel applied with strength p after each round:
///   rho -> (1-p) rho + (p/M) sum_j K_j rho K_j^dag,
/// with the M Kraus operators satisfying sum_j K_j^dag K_j = M * I.
/// The identity stays inside the Kraus set for the built-in channels, so at
/// p = 1 the depolarizing channel yields the maximally mixed state.
struct NoiseModel {
  NoiseKind kind = NoiseKind::depolarizing;
  double p = 0.0;
  std::vector<Eigen::Matrix2cd> kraus;

  int kraus_count() const { return static_cast<int>(kraus.size()); }
};

/// Kraus set {I, X, Y, Z} (M = 4).
NoiseModel depolarizing(double p);

/// Kraus set {I, Z} (M = 2).
NoiseModel dephasing(double p);

NoiseModel make_noise(NoiseKind kind, double p);

/// Arbitrary single-qubit Kraus set; checks trace preservation
/// (sum K^dag K = M I within 1e-9) and 0 <= p <= 1.
NoiseModel custom_channel(double p, std::vector<Eigen::Matrix2cd> kraus);

/// Same Kraus set, different strength.
NoiseModel with_strength(const NoiseModel& noise, double p);

bool has_unitary_kraus(const NoiseModel& noise, double tol = 1e-9);

/// Throws UnsupportedModelError unless every Kraus operator is unitary.
void require_unitary_kraus(const NoiseModel& noise);

}  // namespace qnoise
