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

#include "qnoise/optimize.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>

#include <Eigen/Dense>
#include "json.hpp"

#include "qnoise/errors.hpp"
#include "qnoise/parallel.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct RestartOutcome {
  std::vector<double> x;
  double cost = 0.0;
  bool converged = false;
  std::int64_t evaluations = 0;
};

// BFGS with backtracking Armijo line search. Runs until the gradient norm
// drops below tol or the iteration cap is reached.
RestartOutcome bfgs_minimize(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const OptimizeOptions& options) {
  const int n = static_cast<int>(x0.size());
  RestartOutcome outcome;

  auto eval = [&](const std::vector<double>& x) {
    ++outcome.evaluations;
    return f(x);
  };
  auto gradient = [&](const std::vector<double>& x) {
    Eigen::VectorXd g(n);
    std::vector<double> probe = x;
    for (int i = 0; i < n; ++i) {
      const double xi = x[i];
      probe[i] = xi + options.fd_step;
      const double up = eval(probe);
      probe[i] = xi - options.fd_step;
      const double down = eval(probe);
      probe[i] = xi;
      g[i] = (up - down) / (2.0 * options.fd_step);
    }
    return g;
  };

  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(x0.data(), n);
  double fx = eval(x0);
  Eigen::VectorXd g = gradient(x0);
  Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);

  std::vector<double> scratch(n);
  auto to_vec = [&](const Eigen::VectorXd& v) {
    for (int i = 0; i < n; ++i) scratch[i] = v[i];
    return scratch;
  };

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    if (g.norm() < options.gradient_tol) {
      outcome.converged = true;
      break;
    }
    Eigen::VectorXd direction = -(h_inv * g);
    double slope = direction.dot(g);
    if (slope >= 0.0) {  // not a descent direction: reset to steepest descent
      h_inv.setIdentity();
      direction = -g;
      slope = -g.squaredNorm();
    }

    double step = 1.0;
    double f_new = 0.0;
    Eigen::VectorXd x_new;
    bool decreased = false;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      x_new = x + step * direction;
      f_new = eval(to_vec(x_new));
      if (f_new <= fx + 1e-4 * step * slope) {
        decreased = true;
        break;
      }
      step *= 0.5;
    }
    if (!decreased) break;  // stuck at finite-difference noise level

    const Eigen::VectorXd g_new = gradient(to_vec(x_new));
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12) {
      const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
      const double rho = 1.0 / sy;
      h_inv = (identity - rho * s * y.transpose()) * h_inv *
                  (identity - rho * y * s.transpose()) +
              rho * s * s.transpose();
    }
    x = std::move(x_new);
    fx = f_new;
    g = g_new;
  }
  if (g.norm() < options.gradient_tol) outcome.converged = true;

  outcome.x = to_vec(x);
  outcome.cost = fx;
  return outcome;
}

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

}  // namespace

CostFunction objective(const IsingInstance& instance, const std::optional<NoiseModel>& noise,
                       int depth) {
  validate(instance);
  if (depth < 1) throw ValidationError("depth must be >= 1");
  auto diag = std::make_shared<const std::vector<double>>(diagonal(instance));
  const int n = instance.n_qubits;
  if (noise) {
    NoiseModel model = *noise;
    return [diag, n, depth, model](const AngleSchedule& angles) {
      if (angles.depth() != depth) throw ValidationError("angle schedule depth mismatch");
      return expected_cost_dm(noisy_state(*diag, n, angles, model), *diag);
    };
  }
  return [diag, n, depth](const AngleSchedule& angles) {
    if (angles.depth() != depth) throw ValidationError("angle schedule depth mismatch");
    return expected_cost_pure(qaoa_state(*diag, n, angles), *diag);
  };
}

std::vector<double> finite_difference_gradient(
    const std::function<double(const std::vector<double>&)>& f, const std::vector<double>& x,
    double step) {
  if (!(step > 0.0)) throw ValidationError("finite-difference step must be positive");
  std::vector<double> g(x.size());
  std::vector<double> probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    probe[i] = xi + step;
    const double up = f(probe);
    probe[i] = xi - step;
    const double down = f(probe);
    probe[i] = xi;
    g[i] = (up - down) / (2.0 * step);
  }
  return g;
}

std::vector<double> angles_to_vector(const AngleSchedule& angles) {
  std::vector<double> x;
  x.reserve(2 * angles.depth());
  x.insert(x.end(), angles.gammas.begin(), angles.gammas.end());
  x.insert(x.end(), angles.betas.begin(), angles.betas.end());
  return x;
}

AngleSchedule vector_to_angles(const std::vector<double>& x) {
  if (x.size() % 2 != 0 || x.empty()) {
    throw ValidationError("flat angle vector must have even, positive length");
  }
  const std::size_t d = x.size() / 2;
  AngleSchedule angles;
  angles.gammas.assign(x.begin(), x.begin() + d);
  angles.betas.assign(x.begin() + d, x.end());
  return angles;
}

OptimizationReport optimize_angles(const IsingInstance& instance, int depth,
                                   const std::optional<NoiseModel>& noise,
                                   const OptimizeOptions& options) {
  if (options.restarts < 1) throw ValidationError("restarts must be >= 1");
  const CostFunction cost_fn = objective(instance, noise, depth);
  auto flat_cost = [&cost_fn](const std::vector<double>& x) {
    return cost_fn(vector_to_angles(x));
  };

  auto run_restart = [&](std::uint64_t restart) {
    Rng rng(derive_seed(options.seed, 0x6f70, restart));
    std::vector<double> x0(2 * depth);
    for (double& a : x0) a = rng.uniform(0.0, kTwoPi);
    RestartOutcome outcome = bfgs_minimize(flat_cost, std::move(x0), options);
    // Report within [0, 2pi); the cost is re-evaluated at the wrapped point
    // so the reported pair stays self-consistent.
    for (double& a : outcome.x) a = wrap_angle(a);
    outcome.cost = flat_cost(outcome.x);
    ++outcome.evaluations;
    return outcome;
  };

  using Outcomes = std::vector<RestartOutcome>;
  const Outcomes outcomes = chunked_reduce<Outcomes>(
      static_cast<std::uint64_t>(options.restarts), 1, options.jobs, Outcomes{},
      [&](std::uint64_t begin, std::uint64_t end) {
        Outcomes part;
        for (std::uint64_t r = begin; r < end; ++r) part.push_back(run_restart(r));
        return part;
      },
      [](Outcomes& acc, Outcomes part) {
        for (auto& outcome : part) acc.push_back(std::move(outcome));
      });

  OptimizationReport report;
  std::size_t best_index = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    report.restart_costs.push_back(outcomes[r].cost);
    report.evaluations += outcomes[r].evaluations;
    report.all_converged = report.all_converged && outcomes[r].converged;
    if (outcomes[r].cost < outcomes[best_index].cost) best_index = r;
  }
  report.best_angles = vector_to_angles(outcomes[best_index].x);
  report.best_cost = outcomes[best_index].cost;
  return report;
}

void write_report_json(const OptimizationReport& report, std::ostream& out) {
  nlohmann::json j{{"best_angles",
                    {{"gammas", report.best_angles.gammas}, {"betas", report.best_angles.betas}}},
                   {"best_cost", report.best_cost},
                   {"restart_costs", report.restart_costs},
                   {"evaluations", report.evaluations},
                   {"all_converged", report.all_converged}};
  out << j.dump(2) << "\n";
}

void write_report_file(const OptimizationReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_report_json(report, out);
}

}  // namespace qnoise
