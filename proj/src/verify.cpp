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

#include <cmath>
#include <fstream>

#include "json.hpp"

#include "qnoise/closedform.hpp"
#include "qnoise/decomposition.hpp"
#include "qnoise/errors.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

namespace {

AngleSchedule pseudo_angles(int depth, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x616e));
  AngleSchedule angles;
  for (int k = 0; k < depth; ++k) {
    angles.gammas.push_back(rng.uniform(0.0, 2.0));
    angles.betas.push_back(rng.uniform(0.0, 2.0));
  }
  return angles;
}

struct Checker {
  std::vector<CheckResult> results;

  void record(const std::string& name, double metric, double tolerance,
              const std::string& detail) {
    results.push_back({name, metric <= tolerance, metric, tolerance, detail});
  }
};

// fidelity 1 - p/2 and cost (1-p) * C, exact single-qubit depolarizing laws.
void check_single_qubit_laws(Checker& checker, const VerifyHooks& hooks) {
  IsingInstance instance;
  instance.n_qubits = 1;
  instance.fields = {{0, 1.0}};
  const std::vector<double> diag = diagonal(instance);

  const AngleSchedule identity_round{{0.0}, {0.0}};   // keeps |+> as the round output
  const AngleSchedule generic_round{{0.7}, {0.3}};
  const PureState plus = qaoa_state(instance, identity_round);
  const PureState generic = qaoa_state(instance, generic_round);
  const double ideal_cost = expected_cost_pure(generic, diag);

  double worst_f = 0.0;
  double worst_c = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const NoiseModel noise = depolarizing(p);
    worst_f = std::max(worst_f, std::abs(fidelity(hooks.noisy_state(instance, identity_round,
                                                                    noise),
                                                  plus) -
                                         (1.0 - p / 2.0)));
    worst_c = std::max(worst_c,
                       std::abs(expected_cost_dm(hooks.noisy_state(instance, generic_round, noise),
                                                 diag) -
                                (1.0 - p) * ideal_cost));
  }
  checker.record("single-qubit-fidelity-law", worst_f, 1e-12, "F(p) vs 1 - p/2, p in {0,...,1}");
  checker.record("single-qubit-cost-law", worst_c, 1e-12, "C(p) vs (1-p) C_ideal");
}

void check_cross_engine(Checker& checker, const VerifyHooks& hooks, int n, int depth,
                        Ensemble ensemble, std::uint64_t seed, int jobs) {
  const IsingInstance instance = random_instance(n, ensemble, seed);
  const AngleSchedule angles = pseudo_angles(depth, seed);
  double worst = 0.0;
  for (const NoiseKind kind : {NoiseKind::depolarizing, NoiseKind::dephasing}) {
    const PatternSums sums =
        pattern_sums(instance, angles, make_noise(kind, 0.5), 1'000'000, jobs);
    for (const double p : {0.1, 0.5, 0.9}) {
      const DensityMatrix direct = hooks.noisy_state(instance, angles, make_noise(kind, p));
      worst = std::max(worst, trace_distance(direct, assemble_from_sums(sums, p)));
    }
  }
  checker.record("cross-engine-equivalence-n" + std::to_string(n) + "d" + std::to_string(depth),
                 worst, 1e-10, "pattern-sum state vs density-matrix engine, both channels");
}

void check_haar_limits(Checker& checker, const VerifyHooks& hooks, int n, int depth,
                       std::uint64_t seed) {
  const IsingInstance instance = random_instance(n, Ensemble::pm1, seed);
  const std::vector<double> diag = diagonal(instance);
  const AngleSchedule angles = pseudo_angles(depth, seed);
  const DensityMatrix rho = hooks.noisy_state(instance, angles, depolarizing(1.0));
  const double cost_dev = std::abs(expected_cost_dm(rho, diag) - haar_cost(diag));
  const double fid_dev =
      std::abs(fidelity(rho, qaoa_state(instance, angles)) - std::pow(2.0, -n));
  checker.record("haar-limit-cost-n" + std::to_string(n), cost_dev, 1e-10,
                 "cost at p=1 vs fully mixed reference");
  checker.record("haar-limit-fidelity-n" + std::to_string(n), fid_dev, 1e-10,
                 "fidelity at p=1 vs 2^-N");
}

void check_reconstruction(Checker& checker, const VerifyHooks& hooks, int n, int depth,
                          std::uint64_t seed, std::uint64_t budget, int jobs) {
  const IsingInstance instance = random_instance(n, Ensemble::pm1, seed);
  const std::vector<double> diag = diagonal(instance);
  const AngleSchedule angles = pseudo_angles(depth, seed);
  const NoiseModel proto = depolarizing(0.5);

  CurveOptions options;
  options.budget_per_m = budget;
  options.jobs = jobs;
  const MLevelCurves curves = mlevel_curves(instance, angles, proto, options);

  const PureState ideal = qaoa_state(instance, angles);
  double worst = 0.0;
  for (const double p : {0.1, 0.5, 0.9}) {
    const DensityMatrix rho = hooks.noisy_state(instance, angles, with_strength(proto, p));
    worst = std::max(worst,
                     std::abs(reconstruct_fidelity(curves.fidelity, p) - fidelity(rho, ideal)));
    worst = std::max(worst,
                     std::abs(reconstruct_cost(curves.cost, p) - expected_cost_dm(rho, diag)));
  }
  checker.record("binomial-reconstruction-n" + std::to_string(n), worst, 1e-10,
                 "level-curve recombination vs engine at p in {0.1, 0.5, 0.9}");
}

void check_monte_carlo(Checker& checker, const VerifyHooks& hooks, int n, int depth, double p,
                       std::int64_t trials, std::uint64_t seed, int jobs) {
  const IsingInstance instance = random_instance(n, Ensemble::pm1, seed);
  const std::vector<double> diag = diagonal(instance);
  const AngleSchedule angles = pseudo_angles(depth, seed);
  const NoiseModel noise = depolarizing(p);

  const MonteCarloResult mc = monte_carlo(instance, angles, noise, trials, seed, jobs);
  const DensityMatrix rho = hooks.noisy_state(instance, angles, noise);
  const double cost_sigmas =
      std::abs(mc.cost_mean - expected_cost_dm(rho, diag)) / std::max(mc.cost_stderr, 1e-15);
  const double fid_sigmas = std::abs(mc.fidelity_mean - fidelity(rho, qaoa_state(instance, angles))) /
                            std::max(mc.fidelity_stderr, 1e-15);
  checker.record("monte-carlo-consistency-n" + std::to_string(n),
                 std::max(cost_sigmas, fid_sigmas), 5.0,
                 "trajectory estimates vs engine, in standard errors");
}

}  // namespace

VerifyLevel verify_level_from_string(std::string_view name) {
  if (name == "fast") return VerifyLevel::fast;
  if (name == "full") return VerifyLevel::full;
  throw ValidationError("unknown verify level '" + std::string(name) +
                        "' (expected fast or full)");
}

std::vector<CheckResult> run_verification(VerifyLevel level, int jobs, const VerifyHooks& hooks) {
  VerifyHooks effective = hooks;
  if (!effective.noisy_state) {
    effective.noisy_state = [](const IsingInstance& instance, const AngleSchedule& angles,
                               const NoiseModel& noise) {
      return noisy_state(instance, angles, noise);
    };
  }

  Checker checker;
  check_single_qubit_laws(checker, effective);
  check_cross_engine(checker, effective, 2, 1, Ensemble::pm1, 21, jobs);
  check_cross_engine(checker, effective, 3, 1, Ensemble::uniform, 22, jobs);
  check_cross_engine(checker, effective, 3, 2, Ensemble::pm1, 23, jobs);
  check_cross_engine(checker, effective, 4, 1, Ensemble::uniform, 24, jobs);
  check_cross_engine(checker, effective, 4, 2, Ensemble::pm1, 25, jobs);
  check_haar_limits(checker, effective, 4, 2, 26);
  check_reconstruction(checker, effective, 4, 1, 27, 1u << 20, jobs);
  check_monte_carlo(checker, effective, 3, 1, 0.2, 4000, 28, jobs);

  if (level == VerifyLevel::full) {
    check_cross_engine(checker, effective, 6, 1, Ensemble::pm1, 31, jobs);
    check_haar_limits(checker, effective, 6, 3, 32);
    check_reconstruction(checker, effective, 8, 1, 33, 1u << 20, jobs);
    check_monte_carlo(checker, effective, 6, 2, 0.1, 20000, 34, jobs);
  }
  return checker.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& result : results) {
    if (!result.passed) return false;
  }
  return true;
}

void write_verify_report_json(const std::vector<CheckResult>& results, std::ostream& out) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& result : results) {
    checks.push_back({{"name", result.name},
                      {"passed", result.passed},
                      {"metric", result.metric},
                      {"tolerance", result.tolerance},
                      {"detail", result.detail}});
  }
  out << nlohmann::json{{"all_passed", all_passed(results)}, {"checks", checks}}.dump(2) << "\n";
}

void write_verify_report_file(const std::vector<CheckResult>& results, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_verify_report_json(results, out);
}

}  // namespace qnoise
