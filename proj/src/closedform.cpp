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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>

#include <Eigen/Dense>
#include "json.hpp"

#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

struct FitPoint {
  double m;
  double value;
  double weight;  // 1 unless weighting by samples
};

std::vector<FitPoint> fit_points(const MLevelCurve& curve, bool weighted, bool positive_only) {
  std::vector<FitPoint> points;
  double max_samples = 1.0;
  for (const auto& level : curve.levels) {
    max_samples = std::max(max_samples, static_cast<double>(level.samples));
  }
  for (int m = 0; m < static_cast<int>(curve.levels.size()); ++m) {
    const MLevel& level = curve.levels[m];
    if (!std::isfinite(level.mean)) {
      throw ValidationError("curve contains a non-finite mean");
    }
    if (positive_only && level.mean <= 0.0) continue;
    const double w = weighted ? static_cast<double>(level.samples) / max_samples : 1.0;
    points.push_back({static_cast<double>(m), level.mean, w});
  }
  return points;
}

// Damped Gauss-Newton over a smooth residual vector. residual_fn returns
// false when the parameters are out of the model's domain (the trial step is
// then rejected by raising the damping).
struct LMProblem {
  std::function<bool(const Eigen::VectorXd&, Eigen::VectorXd&, Eigen::MatrixXd&)> eval;
  int n_residuals = 0;
};

struct LMOutcome {
  Eigen::VectorXd params;
  double cost = std::numeric_limits<double>::infinity();
  bool converged = false;
};

LMOutcome levenberg_marquardt(const LMProblem& problem, Eigen::VectorXd x,
                              const FitOptions& options) {
  const int n_params = static_cast<int>(x.size());
  Eigen::VectorXd residuals(problem.n_residuals);
  Eigen::MatrixXd jacobian(problem.n_residuals, n_params);

  LMOutcome outcome;
  if (!problem.eval(x, residuals, jacobian)) return outcome;  // infeasible start
  double cost = residuals.squaredNorm();
  double lambda = 1e-3;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const Eigen::MatrixXd jtj = jacobian.transpose() * jacobian;
    const Eigen::VectorXd jtr = jacobian.transpose() * residuals;
    bool accepted = false;
    Eigen::VectorXd step(n_params);
    while (lambda < 1e12) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += lambda;
      step = damped.ldlt().solve(-jtr);
      Eigen::VectorXd trial = x + step;
      Eigen::VectorXd trial_res(problem.n_residuals);
      Eigen::MatrixXd trial_jac(problem.n_residuals, n_params);
      if (problem.eval(trial, trial_res, trial_jac)) {
        const double trial_cost = trial_res.squaredNorm();
        if (trial_cost <= cost) {
          x = std::move(trial);
          residuals = std::move(trial_res);
          jacobian = std::move(trial_jac);
          cost = trial_cost;
          lambda = std::max(lambda / 3.0, 1e-12);
          accepted = true;
          break;
        }
      }
      lambda *= 10.0;
    }
    if (!accepted) break;  // damping exhausted: stationary
    if (step.norm() < options.step_tol) {
      outcome.converged = true;
      break;
    }
  }
  outcome.params = std::move(x);
  outcome.cost = cost;
  return outcome;
}

// Multi-start driver. Returns the best converged start; throws FitError
// carrying the best iterate when nothing converges.
LMOutcome multi_start(const LMProblem& problem, const std::vector<Eigen::VectorXd>& starts,
                      const FitOptions& options, const char* what) {
  LMOutcome best;
  bool any_converged = false;
  for (const auto& start : starts) {
    LMOutcome outcome = levenberg_marquardt(problem, start, options);
    const bool better = outcome.cost < best.cost;
    if (outcome.converged && (!any_converged || better)) {
      if (!any_converged) {
        best = outcome;
        any_converged = true;
      } else if (better) {
        best = outcome;
      }
    } else if (!any_converged && better) {
      best = outcome;
    }
  }
  if (!any_converged) {
    std::vector<double> params(best.params.data(), best.params.data() + best.params.size());
    throw FitError(std::string(what) + " did not converge within the iteration limit", params,
                   best.cost);
  }
  return best;
}

double clamp_log_rate(double u) { return std::clamp(u, -30.0, 30.0); }

}  // namespace

FidelityFit fit_fidelity(const MLevelCurve& curve, const FitOptions& options) {
  const std::vector<FitPoint> points = fit_points(curve, options.weight_by_samples, true);
  if (points.size() < 3) {
    throw ValidationError("fit_fidelity needs >= 3 m values with positive means");
  }

  // Parameters (alpha, u) with kappa = 1 + exp(u), keeping kappa > 1.
  LMProblem problem;
  problem.n_residuals = static_cast<int>(points.size());
  problem.eval = [&points](const Eigen::VectorXd& params, Eigen::VectorXd& residuals,
                           Eigen::MatrixXd& jacobian) {
    const double alpha = params[0];
    const double u = clamp_log_rate(params[1]);
    const double kappa = 1.0 + std::exp(u);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double m = points[i].m;
      const double decay = std::pow(kappa, -m);
      const double model = 1.0 + alpha * (decay - 1.0);
      if (model <= 0.0) return false;
      const double sw = std::sqrt(points[i].weight);
      residuals[i] = sw * (std::log(model) - std::log(points[i].value));
      jacobian(i, 0) = sw * (decay - 1.0) / model;
      jacobian(i, 1) = sw * (alpha * -m * std::pow(kappa, -m - 1.0) * std::exp(u)) / model;
    }
    return true;
  };

  std::vector<Eigen::VectorXd> starts;
  for (double kappa0 : {1.5, 2.0, 3.0, 5.0}) {
    for (double alpha0 : {0.9, -0.9}) {
      Eigen::VectorXd start(2);
      start << alpha0, std::log(kappa0 - 1.0);
      starts.push_back(start);
    }
  }

  const LMOutcome outcome = multi_start(problem, starts, options, "fit_fidelity");
  FidelityFit fit;
  fit.alpha = outcome.params[0];
  fit.kappa = 1.0 + std::exp(clamp_log_rate(outcome.params[1]));
  fit.residual = outcome.cost;
  return fit;
}

CostFit fit_cost(const MLevelCurve& curve, const FitOptions& options) {
  const std::vector<FitPoint> points = fit_points(curve, options.weight_by_samples, false);
  if (points.size() < 4) {
    throw ValidationError("fit_cost needs >= 4 m values");
  }

  // Parameters (alpha, alpha_tilde, u) with chi = 1 + exp(u).
  LMProblem problem;
  problem.n_residuals = static_cast<int>(points.size());
  problem.eval = [&points](const Eigen::VectorXd& params, Eigen::VectorXd& residuals,
                           Eigen::MatrixXd& jacobian) {
    const double alpha = params[0];
    const double alpha_tilde = params[1];
    const double u = clamp_log_rate(params[2]);
    const double chi = 1.0 + std::exp(u);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double m = points[i].m;
      const double decay = std::pow(chi, -m);
      const double sw = std::sqrt(points[i].weight);
      residuals[i] = sw * (alpha + alpha_tilde * decay - points[i].value);
      jacobian(i, 0) = sw;
      jacobian(i, 1) = sw * decay;
      jacobian(i, 2) = sw * alpha_tilde * -m * std::pow(chi, -m - 1.0) * std::exp(u);
    }
    return true;
  };

  const double head = points.front().value;  // ~ ideal cost at m = 0
  const double tail = points.back().value;   // ~ offset at large m
  const double scale = std::abs(tail) > 1e-12 ? tail : 0.5;
  std::vector<Eigen::VectorXd> starts;
  for (double chi0 : {1.5, 2.0, 3.0, 5.0}) {
    for (double alpha0 : {scale, -scale}) {
      Eigen::VectorXd start(3);
      start << alpha0, head - alpha0, std::log(chi0 - 1.0);
      starts.push_back(start);
    }
  }

  const LMOutcome outcome = multi_start(problem, starts, options, "fit_cost");
  CostFit fit;
  fit.alpha = outcome.params[0];
  fit.alpha_tilde = outcome.params[1];
  fit.chi = 1.0 + std::exp(clamp_log_rate(outcome.params[2]));
  fit.residual = outcome.cost;
  return fit;
}

double model_fidelity(const FidelityFit& fit, int n_slots, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  const double rate = 1.0 - p * (fit.kappa - 1.0) / fit.kappa;
  return 1.0 + fit.alpha * (std::pow(rate, n_slots) - 1.0);
}

double model_cost(const CostFit& fit, int n_slots, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  const double rate = 1.0 - p * (fit.chi - 1.0) / fit.chi;
  return fit.alpha + fit.alpha_tilde * std::pow(rate, n_slots);
}

double delta_exponent(const FidelityFit& fit) {
  return fit.alpha * (fit.kappa - 1.0) / fit.kappa;
}

double eta_exponent(const CostFit& fit) {
  const double c_ideal = fit.alpha + fit.alpha_tilde;
  if (c_ideal == 0.0) {
    throw ValidationError("eta exponent undefined: alpha + alpha_tilde is zero");
  }
  return (c_ideal - fit.alpha) / c_ideal * (fit.chi - 1.0) / fit.chi;
}

double haar_cost(const std::vector<double>& diag) {
  if (diag.empty()) return 0.0;
  long double sum = 0.0L;
  for (double value : diag) sum += value;
  return static_cast<double>(sum / diag.size());
}

void write_fidelity_fit_json(const FidelityFit& fit, std::ostream& out) {
  nlohmann::json j{{"alpha", fit.alpha},
                   {"kappa", fit.kappa},
                   {"residual", fit.residual},
                   {"delta", delta_exponent(fit)}};
  out << j.dump(2) << "\n";
}

void write_cost_fit_json(const CostFit& fit, std::ostream& out) {
  nlohmann::json j{{"alpha", fit.alpha},
                   {"alpha_tilde", fit.alpha_tilde},
                   {"chi", fit.chi},
                   {"residual", fit.residual}};
  if (fit.alpha + fit.alpha_tilde != 0.0) {
    j["eta"] = eta_exponent(fit);
  } else {
    j["eta"] = nullptr;
  }
  out << j.dump(2) << "\n";
}

void write_fidelity_fit_file(const FidelityFit& fit, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_fidelity_fit_json(fit, out);
}

void write_cost_fit_file(const CostFit& fit, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_cost_fit_json(fit, out);
}

}  // namespace qnoise
