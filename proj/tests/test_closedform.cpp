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

#include "qnoise/closedform.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qnoise/errors.hpp"
#include "qnoise/optimize.hpp"
#include "support/oracles.hpp"

using namespace qnoise;

namespace {

MLevelCurve synthetic_curve(int n_slots, const std::function<double(int)>& value) {
  MLevelCurve curve;
  curve.n_slots = n_slots;
  for (int m = 0; m <= n_slots; ++m) {
    curve.levels.push_back({value(m), 1000, true});
  }
  return curve;
}

}  // namespace

TEST_CASE("fidelity fit recovers its own model family") {
  const MLevelCurve curve = synthetic_curve(
      8, [](int m) { return 1.0 + 0.9 * (std::pow(3.0, -m) - 1.0); });
  const FidelityFit fit = fit_fidelity(curve);
  CHECK(fit.alpha == doctest::Approx(0.9).epsilon(1e-6));
  CHECK(fit.kappa == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(fit.residual < 1e-12);
}

TEST_CASE("cost fit recovers its own model family") {
  const MLevelCurve curve =
      synthetic_curve(8, [](int m) { return 1.0 - 8.0 * std::pow(1.5, -m); });
  const CostFit fit = fit_cost(curve);
  CHECK(fit.alpha == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(fit.alpha_tilde == doctest::Approx(-8.0).epsilon(1e-6));
  CHECK(fit.chi == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("fit recovery holds across randomized parameter sets") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const double alpha = rng.uniform(0.3, 1.0);
    const double kappa = rng.uniform(1.3, 6.0);
    const MLevelCurve f = synthetic_curve(
        10, [&](int m) { return 1.0 + alpha * (std::pow(kappa, -m) - 1.0); });
    const FidelityFit ffit = fit_fidelity(f);
    CHECK(ffit.alpha == doctest::Approx(alpha).epsilon(1e-6));
    CHECK(ffit.kappa == doctest::Approx(kappa).epsilon(1e-6));

    const double offset = rng.uniform(-2.0, 2.0);
    const double amplitude = rng.uniform(-10.0, -1.0);
    const double chi = rng.uniform(1.2, 5.0);
    const MLevelCurve c = synthetic_curve(
        10, [&](int m) { return offset + amplitude * std::pow(chi, -m); });
    const CostFit cfit = fit_cost(c);
    CHECK(cfit.alpha == doctest::Approx(offset).epsilon(1e-6));
    CHECK(cfit.alpha_tilde == doctest::Approx(amplitude).epsilon(1e-6));
    CHECK(cfit.chi == doctest::Approx(chi).epsilon(1e-6));
  }
}

TEST_CASE("fit preconditions") {
  MLevelCurve tiny;
  tiny.n_slots = 1;
  tiny.levels = {{1.0, 1, true}, {0.5, 10, true}};
  CHECK_THROWS_AS(fit_fidelity(tiny), ValidationError);
  CHECK_THROWS_AS(fit_cost(tiny), ValidationError);
}

TEST_CASE("reference exponent arithmetic") {
  SUBCASE("overlap decay") {
    CHECK(std::abs(delta_exponent({0.9958, 2.71, 0.0}) - 0.63) < 0.005);
    CHECK(delta_exponent({1.0, 1e9, 0.0}) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(delta_exponent({0.0, 2.0, 0.0}) == 0.0);
  }
  SUBCASE("cost decay") {
    CHECK(std::abs(eta_exponent({1.04, -7.41, 1.32, 0.0}) - 0.28) < 0.005);
    // Offset-free case reduces to the bare rate factor.
    CHECK(eta_exponent({0.0, -5.0, 1.5, 0.0}) == doctest::Approx(0.5 / 1.5).epsilon(1e-12));
    CHECK(eta_exponent({0.3, -5.0, 1.0 + 1e-12, 0.0}) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK_THROWS_AS(eta_exponent({1.0, -1.0, 1.5, 0.0}), ValidationError);
  }
}

TEST_CASE("fidelity model limits and shape") {
  const FidelityFit fit{0.8, 3.0, 0.0};
  CHECK(model_fidelity(fit, 8, 0.0) == 1.0);

  // alpha = 1, kappa = 2 on one qubit reproduces the exact single-qubit law.
  const FidelityFit single{1.0, 2.0, 0.0};
  for (double p : {0.0, 0.3, 0.8, 1.0}) {
    CHECK(model_fidelity(single, 1, p) == doctest::Approx(1.0 - p / 2.0).epsilon(1e-12));
  }

  double previous = 2.0;
  for (int i = 0; i <= 20; ++i) {
    const double value = model_fidelity(fit, 8, i / 20.0);
    CHECK(value <= previous + 1e-12);  // non-increasing in p
    CHECK(value >= 1.0 - fit.alpha - 1e-12);
    CHECK(value <= 1.0 + 1e-12);
    previous = value;
  }
}

TEST_CASE("cost model limits") {
  const CostFit fit{1.04, -7.41, 1.32, 0.0};
  CHECK(model_cost(fit, 8, 0.0) == doctest::Approx(1.04 - 7.41).epsilon(1e-12));
  // Long circuits at full strength decay to the offset.
  CHECK(model_cost(fit, 48, 1.0) == doctest::Approx(1.04).epsilon(1e-4));
  // Monotone rise toward the offset for a minimizing-angle curve.
  double previous = -100.0;
  for (int i = 0; i <= 20; ++i) {
    const double value = model_cost(fit, 8, i / 20.0);
    CHECK(value >= previous - 1e-12);
    previous = value;
  }
}

TEST_CASE("binomial identity ties recombination to the closed form") {
  // For a curve drawn exactly from the model family, the binomial-weighted
  // recombination and the closed-form expression are the same polynomial.
  const double alpha = 0.85, kappa = 2.4;
  const int n_slots = 9;
  const MLevelCurve curve = synthetic_curve(
      n_slots, [&](int m) { return 1.0 + alpha * (std::pow(kappa, -m) - 1.0); });
  const FidelityFit fit{alpha, kappa, 0.0};
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    CHECK(reconstruct_fidelity(curve, p) ==
          doctest::Approx(model_fidelity(fit, n_slots, p)).epsilon(1e-13));
  }
}

TEST_CASE("small-p expansion matches the power-law form to second order") {
  const FidelityFit fit{0.996, 2.71, 0.0};
  const double delta = delta_exponent(fit);
  const int n_slots = 8;
  auto deviation = [&](double p) {
    return std::abs(model_fidelity(fit, n_slots, p) - std::pow(1.0 - p, delta * n_slots));
  };
  CHECK(deviation(0.01) < 5.0 * 0.01 * 0.01);
  // Quadratic scaling: shrinking p by 2 shrinks the gap by about 4.
  CHECK(deviation(0.01) / deviation(0.005) == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("haar cost is the diagonal mean") {
  CHECK(haar_cost({1.0, -1.0}) == 0.0);
  CHECK(haar_cost({1.5, -0.5, 2.0, 1.0}) == doctest::Approx(1.0));
  const std::vector<double> diag = diagonal(random_instance(5, Ensemble::pm1, 51));
  CHECK(haar_cost(diag) == doctest::Approx(0.0).epsilon(1e-12));
  std::vector<double> shifted = diag;
  for (double& e : shifted) e += 0.75;
  CHECK(haar_cost(shifted) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("fits describe a real level curve") {
  const IsingInstance instance = random_instance(6, Ensemble::pm1, 52);
  const OptimizeOptions opt_options{.restarts = 8, .seed = 3};
  const OptimizationReport report = optimize_angles(instance, 1, std::nullopt, opt_options);

  CurveOptions options;
  options.budget_per_m = 1 << 20;
  options.jobs = 2;
  const MLevelCurves curves =
      mlevel_curves(instance, report.best_angles, depolarizing(0.5), options);

  const FidelityFit ffit = fit_fidelity(curves.fidelity);
  const CostFit cfit = fit_cost(curves.cost);
  CHECK(ffit.kappa > 1.0);
  CHECK(cfit.chi > 1.0);
  CHECK(std::isfinite(ffit.residual));
  CHECK(std::isfinite(cfit.residual));
  // The fitted offsets reconstruct the ideal cost to within ten percent.
  const double c0 = curves.cost.levels[0].mean;
  CHECK(std::abs(cfit.alpha + cfit.alpha_tilde - c0) < 0.1 * std::abs(c0));
  // And the model tracks the data closely across levels.
  for (int m = 0; m <= curves.fidelity.n_slots; ++m) {
    const double model = 1.0 + ffit.alpha * (std::pow(ffit.kappa, -m) - 1.0);
    CHECK(std::abs(model - curves.fidelity.levels[m].mean) < 0.05);
  }
}

TEST_CASE("weighted fitting stays close on exact synthetic data") {
  MLevelCurve curve = synthetic_curve(
      8, [](int m) { return 1.0 + 0.7 * (std::pow(2.2, -m) - 1.0); });
  for (int m = 0; m <= 8; ++m) curve.levels[m].samples = 100 + 50 * m;
  FitOptions options;
  options.weight_by_samples = true;
  const FidelityFit fit = fit_fidelity(curve, options);
  CHECK(fit.alpha == doctest::Approx(0.7).epsilon(1e-6));
  CHECK(fit.kappa == doctest::Approx(2.2).epsilon(1e-6));
}

TEST_CASE("fit json exports carry the derived exponents") {
  std::stringstream fstream;
  write_fidelity_fit_json({0.9958, 2.71, 1e-4}, fstream);
  const auto fj = nlohmann::json::parse(fstream.str());
  CHECK(fj.at("alpha").get<double>() == doctest::Approx(0.9958));
  CHECK(fj.at("delta").get<double>() == doctest::Approx(0.6283).epsilon(1e-3));

  std::stringstream cstream;
  write_cost_fit_json({1.04, -7.41, 1.32, 1e-3}, cstream);
  const auto cj = nlohmann::json::parse(cstream.str());
  CHECK(cj.at("chi").get<double>() == doctest::Approx(1.32));
  CHECK(cj.at("eta").get<double>() == doctest::Approx(0.282).epsilon(1e-2));
}
