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

#include "qnoise/verify.hpp"

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qnoise/errors.hpp"

using namespace qnoise;

TEST_CASE("fast verification passes on the real engine") {
  const std::vector<CheckResult> results = run_verification(VerifyLevel::fast, 2);
  CHECK(!results.empty());
  for (const CheckResult& result : results) {
    INFO(result.name, ": metric=", result.metric, " tol=", result.tolerance);
    CHECK(result.passed);
  }
  CHECK(all_passed(results));
}

TEST_CASE("a corrupted channel is caught and named") {
  // Fault injection: depolarizing requests are served by a dephasing-biased
  // Kraus set of the same strength.
  VerifyHooks hooks;
  hooks.noisy_state = [](const IsingInstance& instance, const AngleSchedule& angles,
                         const NoiseModel& noise) {
    NoiseModel corrupted = noise;
    if (noise.kind == NoiseKind::depolarizing) {
      const NoiseModel z_only = dephasing(noise.p);
      corrupted.kraus = {z_only.kraus[0], z_only.kraus[1], z_only.kraus[1], z_only.kraus[1]};
    }
    return noisy_state(instance, angles, corrupted);
  };

  const std::vector<CheckResult> results = run_verification(VerifyLevel::fast, 2, hooks);
  CHECK(!all_passed(results));

  bool law_failed = false;
  bool cross_failed = false;
  for (const CheckResult& result : results) {
    if (!result.passed && result.name.find("single-qubit-fidelity-law") != std::string::npos) {
      law_failed = true;
    }
    if (!result.passed && result.name.find("cross-engine") != std::string::npos) {
      cross_failed = true;
    }
  }
  CHECK(law_failed);
  CHECK(cross_failed);
}

TEST_CASE("verification report is machine readable") {
  const std::vector<CheckResult> results = run_verification(VerifyLevel::fast, 2);
  std::stringstream stream;
  write_verify_report_json(results, stream);
  const auto j = nlohmann::json::parse(stream.str());
  CHECK(j.at("all_passed").get<bool>());
  REQUIRE(j.at("checks").size() == results.size());
  for (const auto& check : j.at("checks")) {
    CHECK(check.contains("name"));
    CHECK(check.contains("passed"));
    CHECK(check.contains("metric"));
    CHECK(check.contains("tolerance"));
  }
}

TEST_CASE("verify level parsing") {
  CHECK(verify_level_from_string("fast") == VerifyLevel::fast);
  CHECK(verify_level_from_string("full") == VerifyLevel::full);
  CHECK_THROWS_AS(verify_level_from_string("exhaustive"), ValidationError);
}
