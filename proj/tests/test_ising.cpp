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

#include <sstream>

#include "doctest.h"
#include "qnoise/errors.hpp"
#include "support/oracles.hpp"

using namespace qnoise;

namespace {

IsingInstance coupled_pair() {
  IsingInstance instance;
  instance.n_qubits = 2;
  instance.couplings = {{0, 1, 1.0}};
  return instance;
}

IsingInstance single_field() {
  IsingInstance instance;
  instance.n_qubits = 1;
  instance.fields = {{0, 1.0}};
  return instance;
}

}  // namespace

TEST_CASE("diagonal of a single coupling matches the two-spin product") {
  const std::vector<double> diag = diagonal(coupled_pair());
  REQUIRE(diag.size() == 4);
  CHECK(diag[0] == doctest::Approx(1.0));
  CHECK(diag[1] == doctest::Approx(-1.0));
  CHECK(diag[2] == doctest::Approx(-1.0));
  CHECK(diag[3] == doctest::Approx(1.0));
}

TEST_CASE("diagonal of a single field is the two-level splitting") {
  const std::vector<double> diag = diagonal(single_field());
  REQUIRE(diag.size() == 2);
  CHECK(diag[0] == doctest::Approx(1.0));
  CHECK(diag[1] == doctest::Approx(-1.0));
}

TEST_CASE("diagonal matches the per-bitstring oracle, higher-order included") {
  IsingInstance instance = random_instance(4, Ensemble::uniform, 9);
  instance.higher_order = {{{0, 1, 3}, 0.25}, {{0, 1, 2, 3}, -0.5}};
  const std::vector<double> diag = diagonal(instance);
  for (std::uint64_t z = 0; z < 16; ++z) {
    CHECK(diag[z] == doctest::Approx(testing::energy_of_bitstring(instance, z)).epsilon(1e-12));
  }
}

TEST_CASE("ground energy of the antiferromagnetic pair") {
  const GroundState gs = ground_energy(coupled_pair());
  CHECK(gs.energy == doctest::Approx(-1.0));
  CHECK(gs.bitstring == 1);  // ties break to the smallest basis index
}

TEST_CASE("ground energy of a single field") {
  const GroundState gs = ground_energy(single_field());
  CHECK(gs.energy == doctest::Approx(-1.0));
  CHECK(gs.bitstring == 1);
}

TEST_CASE("ground energy equals an exhaustive scan") {
  const IsingInstance instance = random_instance(6, Ensemble::uniform, 17);
  const GroundState gs = ground_energy(instance);

  double best = testing::energy_of_bitstring(instance, 0);
  std::uint64_t best_z = 0;
  for (std::uint64_t z = 1; z < 64; ++z) {
    const double e = testing::energy_of_bitstring(instance, z);
    if (e < best) {
      best = e;
      best_z = z;
    }
  }
  CHECK(gs.energy == doctest::Approx(best).epsilon(1e-12));
  CHECK(gs.bitstring == best_z);
}

TEST_CASE("ground energy bounds every diagonal entry") {
  const IsingInstance instance = random_instance(5, Ensemble::pm1, 3);
  const GroundState gs = ground_energy(instance);
  for (double e : diagonal(instance)) CHECK(gs.energy <= e + 1e-12);
}

TEST_CASE("random instances are deterministic in the seed") {
  const IsingInstance a = random_instance(3, Ensemble::pm1, 7);
  const IsingInstance b = random_instance(3, Ensemble::pm1, 7);
  CHECK(a.couplings == b.couplings);
  CHECK(a.fields == b.fields);
  const IsingInstance c = random_instance(3, Ensemble::pm1, 8);
  CHECK(a.couplings != c.couplings);  // almost surely, and fixed by the seeds
}

TEST_CASE("pm1 ensemble produces all pairs and no fields") {
  const IsingInstance instance = random_instance(3, Ensemble::pm1, 4);
  CHECK(instance.couplings.size() == 3);
  CHECK(instance.fields.empty());
  for (const auto& [i, j, coupling] : instance.couplings) {
    CHECK(std::abs(coupling) == doctest::Approx(1.0));
  }
}

TEST_CASE("uniform ensemble stays in range") {
  const IsingInstance instance = random_instance(8, Ensemble::uniform, 1);
  CHECK(instance.couplings.size() == 28);
  CHECK(instance.fields.size() == 8);
  for (const auto& [i, j, coupling] : instance.couplings) CHECK(std::abs(coupling) <= 1.0);
  for (const auto& [i, h] : instance.fields) CHECK(std::abs(h) <= 1.0);
}

TEST_CASE("ring ensemble wraps the cycle and degenerates gracefully") {
  CHECK(random_instance(4, Ensemble::ring, 2).couplings.size() == 4);
  CHECK(random_instance(2, Ensemble::ring, 2).couplings.size() == 1);
  CHECK(random_instance(1, Ensemble::ring, 2).couplings.empty());
}

TEST_CASE("diagonal is traceless and spin-flip symmetric without fields") {
  const IsingInstance instance = random_instance(5, Ensemble::pm1, 11);
  const std::vector<double> diag = diagonal(instance);
  double sum = 0.0;
  for (double e : diag) sum += e;
  CHECK(sum == doctest::Approx(0.0).epsilon(1e-12));
  const std::uint64_t mask = diag.size() - 1;
  for (std::uint64_t z = 0; z < diag.size(); ++z) {
    CHECK(diag[z] == doctest::Approx(diag[~z & mask]).epsilon(1e-12));
  }
}

TEST_CASE("validation rejects malformed instances") {
  IsingInstance instance;
  instance.n_qubits = 2;

  SUBCASE("out-of-range index") {
    instance.fields = {{2, 1.0}};
    CHECK_THROWS_AS(validate(instance), ValidationError);
  }
  SUBCASE("duplicate field") {
    instance.fields = {{0, 1.0}, {0, 2.0}};
    CHECK_THROWS_AS(validate(instance), ValidationError);
  }
  SUBCASE("coupling with i >= j") {
    instance.couplings = {{1, 0, 1.0}};
    CHECK_THROWS_AS(validate(instance), ValidationError);
  }
  SUBCASE("duplicate coupling") {
    instance.couplings = {{0, 1, 1.0}, {0, 1, -1.0}};
    CHECK_THROWS_AS(validate(instance), ValidationError);
  }
  SUBCASE("higher-order set too small") {
    instance.n_qubits = 3;
    instance.higher_order = {{{0, 1}, 1.0}};
    CHECK_THROWS_AS(validate(instance), ValidationError);
  }
  SUBCASE("higher-order set unsorted") {
    instance.n_qubits = 3;
    instance.higher_order = {{{1, 0, 2}, 1.0}};
    CHECK_THROWS_AS(validate(instance), ValidationError);
  }
}

TEST_CASE("size caps raise resource errors") {
  IsingInstance instance;
  instance.n_qubits = 25;
  CHECK_THROWS_AS(diagonal(instance), ResourceError);
  const IsingInstance small = random_instance(5, Ensemble::pm1, 1);
  CHECK_THROWS_AS(ground_energy(small, 4), ResourceError);
}

TEST_CASE("unknown ensemble name is rejected") {
  CHECK_THROWS_AS(ensemble_from_string("gaussian"), ValidationError);
  CHECK(ensemble_from_string("pm1") == Ensemble::pm1);
  CHECK(to_string(Ensemble::ring) == "ring");
}

TEST_CASE("instance json round-trips losslessly") {
  IsingInstance instance = random_instance(4, Ensemble::uniform, 23);
  instance.higher_order = {{{0, 2, 3}, -0.75}};

  std::stringstream stream;
  write_instance_json(instance, stream);
  const IsingInstance parsed = read_instance_json(stream);

  CHECK(parsed.n_qubits == instance.n_qubits);
  CHECK(parsed.fields == instance.fields);
  CHECK(parsed.couplings == instance.couplings);
  CHECK(parsed.higher_order == instance.higher_order);
}

TEST_CASE("instance json rejects malformed and invalid input") {
  SUBCASE("not json") {
    std::stringstream stream("not json at all");
    CHECK_THROWS_AS(read_instance_json(stream), ValidationError);
  }
  SUBCASE("missing n") {
    std::stringstream stream(R"({"fields": []})");
    CHECK_THROWS_AS(read_instance_json(stream), ValidationError);
  }
  SUBCASE("invariant violation") {
    std::stringstream stream(R"({"n": 2, "couplings": [[1, 0, 1.0]]})");
    CHECK_THROWS_AS(read_instance_json(stream), ValidationError);
  }
  SUBCASE("index out of range") {
    std::stringstream stream(R"({"n": 2, "fields": [[5, 1.0]]})");
    CHECK_THROWS_AS(read_instance_json(stream), ValidationError);
  }
}
