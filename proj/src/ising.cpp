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

#include "qnoise/ising.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qnoise/errors.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

namespace {

void check_index(int i, int n, const char* what) {
  if (i < 0 || i >= n) {
    throw ValidationError(std::string(what) + " index " + std::to_string(i) +
                          " out of range for n_qubits=" + std::to_string(n));
  }
}

}  // namespace

void validate(const IsingInstance& instance) {
  if (instance.n_qubits < 1) {
    throw ValidationError("n_qubits must be >= 1");
  }
  const int n = instance.n_qubits;

  std::set<int> field_indices;
  for (const auto& [i, h] : instance.fields) {
    (void)h;
    check_index(i, n, "field");
    if (!field_indices.insert(i).second) {
      throw ValidationError("duplicate field index " + std::to_string(i));
    }
  }

  std::set<std::pair<int, int>> pairs;
  for (const auto& [i, j, coupling] : instance.couplings) {
    (void)coupling;
    check_index(i, n, "coupling");
    check_index(j, n, "coupling");
    if (i >= j) {
      throw ValidationError("coupling requires i < j, got (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
    }
    if (!pairs.insert({i, j}).second) {
      throw ValidationError("duplicate coupling (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
    }
  }

  std::set<std::vector<int>> subsets;
  for (const auto& [subset, coeff] : instance.higher_order) {
    (void)coeff;
    if (subset.size() < 3) {
      throw ValidationError("higher-order term needs at least 3 indices");
    }
    for (std::size_t k = 0; k < subset.size(); ++k) {
      check_index(subset[k], n, "higher-order");
      if (k > 0 && subset[k] <= subset[k - 1]) {
        throw ValidationError("higher-order index set must be sorted and duplicate-free");
      }
    }
    if (!subsets.insert(subset).second) {
      throw ValidationError("duplicate higher-order index set");
    }
  }
}

std::vector<double> diagonal(const IsingInstance& instance) {
  validate(instance);
  const int n = instance.n_qubits;
  if (n > kMaxDiagonalQubits) {
    throw ResourceError("diagonal for n=" + std::to_string(n) + " exceeds cap of " +
                        std::to_string(kMaxDiagonalQubits) + " qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<double> diag(dim, 0.0);

  // s_i(z) = +1 if bit i of z is clear, -1 if set.
  auto spin = [](std::uint64_t z, int i) { return ((z >> i) & 1u) ? -1.0 : 1.0; };

  for (std::uint64_t z = 0; z < dim; ++z) {
    double e = 0.0;
    for (const auto& [i, h] : instance.fields) e += h * spin(z, i);
    for (const auto& [i, j, coupling] : instance.couplings) {
      e += coupling * spin(z, i) * spin(z, j);
    }
    for (const auto& [subset, coeff] : instance.higher_order) {
      double prod = coeff;
      for (int i : subset) prod *= spin(z, i);
      e += prod;
    }
    diag[z] = e;
  }
  return diag;
}

GroundState ground_energy(const IsingInstance& instance, int max_qubits) {
  validate(instance);
  if (instance.n_qubits > max_qubits) {
    throw ResourceError("ground_energy capped at " + std::to_string(max_qubits) +
                        " qubits, got n=" + std::to_string(instance.n_qubits));
  }
  const std::vector<double> diag = diagonal(instance);
  GroundState gs{diag[0], 0};
  for (std::uint64_t z = 1; z < diag.size(); ++z) {
    if (diag[z] < gs.energy) {
      gs.energy = diag[z];
      gs.bitstring = z;
    }
  }
  return gs;
}

Ensemble ensemble_from_string(std::string_view name) {
  if (name == "pm1") return Ensemble::pm1;
  if (name == "uniform") return Ensemble::uniform;
  if (name == "ring") return Ensemble::ring;
  throw ValidationError("unknown ensemble '" + std::string(name) +
                        "' (expected pm1, uniform or ring)");
}

std::string to_string(Ensemble ensemble) {
  switch (ensemble) {
    case Ensemble::pm1:
      return "pm1";
    case Ensemble::uniform:
      return "uniform";
    case Ensemble::ring:
      return "ring";
  }
  throw ValidationError("invalid ensemble value");
}

IsingInstance random_instance(int n, Ensemble ensemble, std::uint64_t seed) {
  if (n < 1) throw ValidationError("n must be >= 1");
  Rng rng(derive_seed(seed, 0x1517));

  IsingInstance instance;
  instance.n_qubits = n;
  switch (ensemble) {
    case Ensemble::pm1:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          instance.couplings.emplace_back(i, j, static_cast<double>(rng.sign()));
        }
      }
      break;
    case Ensemble::uniform:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          instance.couplings.emplace_back(i, j, rng.uniform(-1.0, 1.0));
        }
      }
      for (int i = 0; i < n; ++i) {
        instance.fields.emplace_back(i, rng.uniform(-1.0, 1.0));
      }
      break;
    case Ensemble::ring:
      for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        if (i == j) continue;                 // n = 1: no edge
        if (n == 2 && i == 1) continue;       // avoid the duplicate (0,1) edge
        const auto [a, b] = std::minmax(i, j);
        instance.couplings.emplace_back(a, b, static_cast<double>(rng.sign()));
      }
      break;
  }
  validate(instance);
  return instance;
}

namespace {

using nlohmann::json;

json to_json(const IsingInstance& instance) {
  json fields = json::array();
  for (const auto& [i, h] : instance.fields) fields.push_back({i, h});
  json couplings = json::array();
  for (const auto& [i, j, coupling] : instance.couplings) couplings.push_back({i, j, coupling});
  json higher = json::array();
  for (const auto& [subset, coeff] : instance.higher_order) higher.push_back({subset, coeff});
  return json{{"n", instance.n_qubits},
              {"fields", fields},
              {"couplings", couplings},
              {"higher_order", higher}};
}

IsingInstance from_json(const json& j) {
  IsingInstance instance;
  try {
    instance.n_qubits = j.at("n").get<int>();
    for (const auto& f : j.value("fields", json::array())) {
      if (!f.is_array() || f.size() != 2) throw ValidationError("field entry must be [i, h]");
      instance.fields.emplace_back(f[0].get<int>(), f[1].get<double>());
    }
    for (const auto& c : j.value("couplings", json::array())) {
      if (!c.is_array() || c.size() != 3) {
        throw ValidationError("coupling entry must be [i, j, J]");
      }
      instance.couplings.emplace_back(c[0].get<int>(), c[1].get<int>(), c[2].get<double>());
    }
    for (const auto& h : j.value("higher_order", json::array())) {
      if (!h.is_array() || h.size() != 2) {
        throw ValidationError("higher_order entry must be [[i...], c]");
      }
      instance.higher_order.emplace_back(h[0].get<std::vector<int>>(), h[1].get<double>());
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed instance json: ") + e.what());
  }
  validate(instance);
  return instance;
}

}  // namespace

IsingInstance read_instance_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("instance is not valid json: ") + e.what());
  }
  return from_json(j);
}

IsingInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  return read_instance_json(in);
}

void write_instance_json(const IsingInstance& instance, std::ostream& out) {
  validate(instance);
  out << to_json(instance).dump(2) << "\n";
}

void write_instance_file(const IsingInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_instance_json(instance, out);
}

}  // namespace qnoise
