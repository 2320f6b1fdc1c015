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

#include <iosfwd>
#include <vector>

#include "qnoise/decomposition.hpp"

namespace qnoise {

/// Two-parameter overlap decay model f_m = 1 + alpha (kappa^-m - 1),
/// which is pinned to f_0 = 1.
struct FidelityFit {
  double alpha = 0.0;
  double kappa = 2.0;      // constrained > 1
  double residual = 0.0;   // sum of squared log-residuals at the optimum
};

/// Three-parameter cost decay model c_m = alpha + alpha_tilde chi^-m,
/// with alpha + alpha_tilde playing the role of the ideal cost.
struct CostFit {
  double alpha = 0.0;
  double alpha_tilde = 0.0;
  double chi = 2.0;        // constrained > 1
  double residual = 0.0;   // sum of squared linear residuals at the optimum
};

struct FitOptions {
  bool weight_by_samples = false;  // inverse-variance weighting (samples as weights)
  int max_iterations = 200;
  double step_tol = 1e-10;
};

/// Least squares on the log of the data over (alpha, kappa), damped
/// Gauss-Newton with 8 deterministic starts. Needs >= 3 distinct m values
/// with positive means.
FidelityFit fit_fidelity(const MLevelCurve& curve, const FitOptions& options = {});

/// Least squares on linear residuals over (alpha, alpha_tilde, chi); the
/// cost data can be negative, so no log. Needs >= 4 distinct m values.
CostFit fit_cost(const MLevelCurve& curve, const FitOptions& options = {});

/// 1 + alpha ([1 - p (kappa-1)/kappa]^n_slots - 1).
double model_fidelity(const FidelityFit& fit, int n_slots, double p);

/// alpha + alpha_tilde [1 - p (chi-1)/chi]^n_slots.
double model_cost(const CostFit& fit, int n_slots, double p);

/// Small-p power-law exponent alpha (kappa-1)/kappa.
double delta_exponent(const FidelityFit& fit);

/// Small-p exponent ((C_ideal - alpha)/C_ideal)((chi-1)/chi) with
/// C_ideal = alpha + alpha_tilde; undefined when that sum is zero.
double eta_exponent(const CostFit& fit);

/// Fully mixed reference cost: mean of the diagonal.
double haar_cost(const std::vector<double>& diag);

// JSON exports including the derived exponent.
void write_fidelity_fit_json(const FidelityFit& fit, std::ostream& out);
void write_cost_fit_json(const CostFit& fit, std::ostream& out);
void write_fidelity_fit_file(const FidelityFit& fit, const std::string& path);
void write_cost_fit_file(const CostFit& fit, const std::string& path);

}  // namespace qnoise
