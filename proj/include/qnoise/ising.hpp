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
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace qnoise {

/// Largest qubit count for which the full 2^n diagonal may be materialized.
inline constexpr int kMaxDiagonalQubits = 24;

/// A cost Hamiltonian diagonal in the computational basis: single-site
/// fields h_i, pair couplings J_ij (i < j), and optional higher-order
/// diagonal terms over index sets of size >= 3.
struct IsingInstance {
  int n_qubits = 0;
  std::vector<std::pair<int, double>> fields;              // (i, h_i)
  std::vector<std::tuple<int, int, double>> couplings;     // (i, j, J_ij), i < j
  std::vector<std::pair<std::vector<int>, double>> higher_order;  // (sorted set, coeff)
};

/// Throws ValidationError unless all indices are in range, couplings have
/// i < j, and there are no duplicate fields/pairs/subsets.
void validate(const IsingInstance& instance);

/// Energy of every computational basis state. Spin convention: bit i of the
/// basis index z (bit 0 = least significant) maps to s_i = +1 when the bit
/// is 0 and s_i = -1 when it is 1, so entry z is
///   sum_i h_i s_i + sum_{i<j} J_ij s_i s_j + higher-order products.
std::vector<double> diagonal(const IsingInstance& instance);

struct GroundState {
  double energy = 0.0;
  std::uint64_t bitstring = 0;  // argmin basis index; ties broken downward
};

/// Exhaustive minimum of the diagonal. Caps at max_qubits (ResourceError).
GroundState ground_energy(const IsingInstance& instance, int max_qubits = kMaxDiagonalQubits);

enum class Ensemble {
  pm1,      // all-pairs J in {-1,+1}, no fields
  uniform,  // all-pairs J and all fields uniform in [-1,1]
  ring,     // nearest-neighbour cycle, J in {-1,+1}
};

Ensemble ensemble_from_string(std::string_view name);
std::string to_string(Ensemble ensemble);

/// Deterministic random instance for a fixed (n, ensemble, seed).
IsingInstance random_instance(int n, Ensemble ensemble, std::uint64_t seed);

// JSON persistence. Schema: {"n": int, "fields": [[i, h], ...],
// "couplings": [[i, j, J], ...], "higher_order": [[[i...], c], ...]}.
// Reading validates the result and rejects malformed input.
IsingInstance read_instance_json(std::istream& in);
IsingInstance read_instance_file(const std::string& path);
void write_instance_json(const IsingInstance& instance, std::ostream& out);
void write_instance_file(const IsingInstance& instance, const std::string& path);

}  // namespace qnoise
