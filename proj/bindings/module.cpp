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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qnoise/closedform.hpp"
#include "qnoise/decomposition.hpp"
#include "qnoise/engine.hpp"
#include "qnoise/errors.hpp"
#include "qnoise/optimize.hpp"
#include "qnoise/tradeoff.hpp"
#include "qnoise/verify.hpp"

namespace py = pybind11;
using namespace qnoise;

namespace {

NoiseModel noise_from_args(const std::string& kind, double p) {
  return make_noise(noise_kind_from_string(kind), p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "QAOA circuits under layered local noise: exact engines, "
            "pure-state decomposition, closed-form models.";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<UnsupportedModelError>(m, "UnsupportedModelError", PyExc_ValueError);

  // --- instances -------------------------------------------------------------
  py::class_<IsingInstance>(m, "IsingInstance")
      .def(py::init<>())
      .def_readwrite("n_qubits", &IsingInstance::n_qubits)
      .def_readwrite("fields", &IsingInstance::fields)
      .def_readwrite("couplings", &IsingInstance::couplings)
      .def_readwrite("higher_order", &IsingInstance::higher_order);

  py::class_<GroundState>(m, "GroundState")
      .def_readonly("energy", &GroundState::energy)
      .def_readonly("bitstring", &GroundState::bitstring);

  m.def("diagonal", &diagonal, py::arg("instance"));
  m.def("ground_energy", &ground_energy, py::arg("instance"),
        py::arg("max_qubits") = kMaxDiagonalQubits);
  m.def(
      "random_instance",
      [](int n, const std::string& ensemble, std::uint64_t seed) {
        return random_instance(n, ensemble_from_string(ensemble), seed);
      },
      py::arg("n"), py::arg("ensemble"), py::arg("seed"));
  m.def("read_instance_file", &read_instance_file, py::arg("path"));
  m.def("write_instance_file", &write_instance_file, py::arg("instance"), py::arg("path"));

  // --- states and noise --------------------------------------------------------
  py::class_<AngleSchedule>(m, "AngleSchedule")
      .def(py::init([](std::vector<double> gammas, std::vector<double> betas) {
             AngleSchedule angles{std::move(gammas), std::move(betas)};
             validate(angles);
             return angles;
           }),
           py::arg("gammas"), py::arg("betas"))
      .def_readonly("gammas", &AngleSchedule::gammas)
      .def_readonly("betas", &AngleSchedule::betas)
      .def_property_readonly("depth", &AngleSchedule::depth);

  py::class_<PureState>(m, "PureState")
      .def_readonly("n_qubits", &PureState::n_qubits)
      .def_readonly("amplitudes", &PureState::amplitudes);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_readonly("n_qubits", &DensityMatrix::n_qubits)
      .def_readonly("matrix", &DensityMatrix::matrix);

  py::class_<NoiseModel>(m, "NoiseModel")
      .def_readonly("p", &NoiseModel::p)
      .def_readonly("kraus", &NoiseModel::kraus)
      .def_property_readonly("kind", [](const NoiseModel& n) { return to_string(n.kind); })
      .def_property_readonly("kraus_count", &NoiseModel::kraus_count);

  m.def("depolarizing", &depolarizing, py::arg("p"));
  m.def("dephasing", &dephasing, py::arg("p"));
  m.def("make_noise", &noise_from_args, py::arg("kind"), py::arg("p"));
  m.def("custom_channel", &custom_channel, py::arg("p"), py::arg("kraus"));
  m.def("trace_distance", &trace_distance, py::arg("a"), py::arg("b"));

  // --- engines -----------------------------------------------------------------
  m.def("plus_state", &plus_state, py::arg("n_qubits"));
  m.def("qaoa_state",
        py::overload_cast<const IsingInstance&, const AngleSchedule&>(&qaoa_state),
        py::arg("instance"), py::arg("angles"));
  m.def("expected_cost_pure", &expected_cost_pure, py::arg("state"), py::arg("diag"));
  m.def("noisy_state",
        py::overload_cast<const IsingInstance&, const AngleSchedule&, const NoiseModel&>(
            &noisy_state),
        py::arg("instance"), py::arg("angles"), py::arg("noise"));
  m.def("apply_local_channel", &apply_local_channel, py::arg("rho"), py::arg("noise"),
        py::arg("qubit"));
  m.def("fidelity", &fidelity, py::arg("rho"), py::arg("pure"));
  m.def("expected_cost_dm", &expected_cost_dm, py::arg("rho"), py::arg("diag"));

  py::class_<MonteCarloResult>(m, "MonteCarloResult")
      .def_readonly("cost_mean", &MonteCarloResult::cost_mean)
      .def_readonly("fidelity_mean", &MonteCarloResult::fidelity_mean)
      .def_readonly("cost_stderr", &MonteCarloResult::cost_stderr)
      .def_readonly("fidelity_stderr", &MonteCarloResult::fidelity_stderr)
      .def_readonly("trials", &MonteCarloResult::trials);
  m.def("monte_carlo", &monte_carlo, py::arg("instance"), py::arg("angles"), py::arg("noise"),
        py::arg("trials"), py::arg("seed"), py::arg("jobs") = 1);

  // --- decomposition -------------------------------------------------------------
  py::class_<PatternEntry>(m, "PatternEntry")
      .def(py::init([](int layer, int qubit, int kraus) {
             return PatternEntry{layer, qubit, kraus};
           }),
           py::arg("layer"), py::arg("qubit"), py::arg("kraus"))
      .def_readonly("layer", &PatternEntry::layer)
      .def_readonly("qubit", &PatternEntry::qubit)
      .def_readonly("kraus", &PatternEntry::kraus);

  py::class_<NoisePattern>(m, "NoisePattern").def_readonly("entries", &NoisePattern::entries);
  m.def("make_pattern", &make_pattern, py::arg("entries"), py::arg("n_qubits"), py::arg("depth"),
        py::arg("kraus_count"));
  m.def(
      "pattern_count",
      [](int n, int d, int m_level, int kraus) -> py::object {
        const auto count = pattern_count(n, d, m_level, kraus);
        return count ? py::cast(*count) : py::none();
      },
      py::arg("n_qubits"), py::arg("depth"), py::arg("m"), py::arg("kraus_count"),
      "Number of insertion patterns at level m, or None on overflow.");
  m.def("trajectory_state", &trajectory_state, py::arg("instance"), py::arg("angles"),
        py::arg("noise"), py::arg("pattern"));

  py::class_<MLevel>(m, "MLevel")
      .def_readonly("mean", &MLevel::mean)
      .def_readonly("samples", &MLevel::samples)
      .def_readonly("exact", &MLevel::exact);
  py::class_<MLevelCurve>(m, "MLevelCurve")
      .def_readonly("n_slots", &MLevelCurve::n_slots)
      .def_readonly("levels", &MLevelCurve::levels)
      .def("means", [](const MLevelCurve& curve) {
        std::vector<double> means;
        for (const MLevel& level : curve.levels) means.push_back(level.mean);
        return means;
      });

  auto curve_options = [](std::uint64_t budget, std::uint64_t seed, int jobs) {
    CurveOptions options;
    options.budget_per_m = budget;
    options.seed = seed;
    options.jobs = jobs;
    return options;
  };
  m.def(
      "f_curve",
      [curve_options](const IsingInstance& instance, const AngleSchedule& angles,
                      const NoiseModel& noise, std::uint64_t budget, std::uint64_t seed,
                      int jobs) {
        return f_curve(instance, angles, noise, curve_options(budget, seed, jobs));
      },
      py::arg("instance"), py::arg("angles"), py::arg("noise"), py::arg("budget_per_m") = 2000,
      py::arg("seed") = 0, py::arg("jobs") = 1);
  m.def(
      "c_curve",
      [curve_options](const IsingInstance& instance, const AngleSchedule& angles,
                      const NoiseModel& noise, std::uint64_t budget, std::uint64_t seed,
                      int jobs) {
        return c_curve(instance, angles, noise, curve_options(budget, seed, jobs));
      },
      py::arg("instance"), py::arg("angles"), py::arg("noise"), py::arg("budget_per_m") = 2000,
      py::arg("seed") = 0, py::arg("jobs") = 1);
  m.def("assemble_density_matrix", &assemble_density_matrix, py::arg("instance"),
        py::arg("angles"), py::arg("noise"), py::arg("max_terms"), py::arg("jobs") = 1);
  m.def("reconstruct_fidelity", &reconstruct_fidelity, py::arg("curve"), py::arg("p"));
  m.def("reconstruct_cost", &reconstruct_cost, py::arg("curve"), py::arg("p"));
  m.def("write_curve_file", &write_curve_file, py::arg("curve"), py::arg("path"));

  // --- closed forms ---------------------------------------------------------------
  py::class_<FidelityFit>(m, "FidelityFit")
      .def(py::init([](double alpha, double kappa) {
             return FidelityFit{alpha, kappa, 0.0};
           }),
           py::arg("alpha"), py::arg("kappa"))
      .def_readonly("alpha", &FidelityFit::alpha)
      .def_readonly("kappa", &FidelityFit::kappa)
      .def_readonly("residual", &FidelityFit::residual);
  py::class_<CostFit>(m, "CostFit")
      .def(py::init([](double alpha, double alpha_tilde, double chi) {
             return CostFit{alpha, alpha_tilde, chi, 0.0};
           }),
           py::arg("alpha"), py::arg("alpha_tilde"), py::arg("chi"))
      .def_readonly("alpha", &CostFit::alpha)
      .def_readonly("alpha_tilde", &CostFit::alpha_tilde)
      .def_readonly("chi", &CostFit::chi)
      .def_readonly("residual", &CostFit::residual);

  m.def(
      "fit_fidelity",
      [](const MLevelCurve& curve, bool weighted) {
        FitOptions options;
        options.weight_by_samples = weighted;
        return fit_fidelity(curve, options);
      },
      py::arg("curve"), py::arg("weight_by_samples") = false);
  m.def(
      "fit_cost",
      [](const MLevelCurve& curve, bool weighted) {
        FitOptions options;
        options.weight_by_samples = weighted;
        return fit_cost(curve, options);
      },
      py::arg("curve"), py::arg("weight_by_samples") = false);
  m.def("model_fidelity", &model_fidelity, py::arg("fit"), py::arg("n_slots"), py::arg("p"));
  m.def("model_cost", &model_cost, py::arg("fit"), py::arg("n_slots"), py::arg("p"));
  m.def("delta_exponent", &delta_exponent, py::arg("fit"));
  m.def("eta_exponent", &eta_exponent, py::arg("fit"));
  m.def("haar_cost", &haar_cost, py::arg("diag"));

  // --- optimization -----------------------------------------------------------------
  py::class_<OptimizationReport>(m, "OptimizationReport")
      .def_readonly("best_angles", &OptimizationReport::best_angles)
      .def_readonly("best_cost", &OptimizationReport::best_cost)
      .def_readonly("restart_costs", &OptimizationReport::restart_costs)
      .def_readonly("evaluations", &OptimizationReport::evaluations)
      .def_readonly("all_converged", &OptimizationReport::all_converged);
  m.def(
      "optimize_angles",
      [](const IsingInstance& instance, int depth, const std::optional<NoiseModel>& noise,
         int restarts, std::uint64_t seed, int jobs) {
        OptimizeOptions options;
        options.restarts = restarts;
        options.seed = seed;
        options.jobs = jobs;
        return optimize_angles(instance, depth, noise, options);
      },
      py::arg("instance"), py::arg("depth"), py::arg("noise") = std::nullopt,
      py::arg("restarts") = 20, py::arg("seed") = 0, py::arg("jobs") = 1);
  m.def(
      "objective",
      [](const IsingInstance& instance, const std::optional<NoiseModel>& noise, int depth) {
        return objective(instance, noise, depth);
      },
      py::arg("instance"), py::arg("noise"), py::arg("depth"));

  // --- trade-off ----------------------------------------------------------------------
  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("depth", &SweepRow::depth)
      .def_readonly("p", &SweepRow::p)
      .def_readonly("cost_exact", &SweepRow::cost_exact)
      .def_readonly("fidelity_exact", &SweepRow::fidelity_exact)
      .def_readonly("cost_model", &SweepRow::cost_model)
      .def_readonly("fidelity_model", &SweepRow::fidelity_model)
      .def_readonly("angle_source", &SweepRow::angle_source);
  py::class_<SweepTable>(m, "SweepTable")
      .def_readonly("n_qubits", &SweepTable::n_qubits)
      .def_readonly("rows", &SweepTable::rows)
      .def_readonly("max_cost_model_dev", &SweepTable::max_cost_model_dev)
      .def_readonly("max_fidelity_model_dev", &SweepTable::max_fidelity_model_dev);
  m.def(
      "sweep",
      [](const IsingInstance& instance, const std::vector<int>& depths,
         const std::vector<double>& p_grid, const NoiseModel& noise,
         const std::map<int, AngleSchedule>& angles, int jobs) {
        SweepOptions options;
        options.jobs = jobs;
        return sweep(instance, depths, p_grid, noise, angles, {}, options);
      },
      py::arg("instance"), py::arg("depths"), py::arg("p_grid"), py::arg("noise"),
      py::arg("angles"), py::arg("jobs") = 1);
  m.def("find_crossings", &find_crossings, py::arg("table"), py::arg("depth_a"),
        py::arg("depth_b"));
  py::class_<DepthCostModel>(m, "DepthCostModel")
      .def(py::init([](int depth, const CostFit& fit, double c_ideal) {
             return DepthCostModel{depth, fit, c_ideal};
           }),
           py::arg("depth"), py::arg("fit"), py::arg("c_ideal"));
  m.def("optimal_depth", &optimal_depth, py::arg("models"), py::arg("n_qubits"), py::arg("p"));
  m.def("default_p_grid", &default_p_grid);
  m.def("write_sweep_file", &write_sweep_file, py::arg("table"), py::arg("path"));

  // --- verification -------------------------------------------------------------------
  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("metric", &CheckResult::metric)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def_readonly("detail", &CheckResult::detail);
  m.def(
      "run_verification",
      [](const std::string& level, int jobs) {
        return run_verification(verify_level_from_string(level), jobs);
      },
      py::arg("level") = "fast", py::arg("jobs") = 1);
}
