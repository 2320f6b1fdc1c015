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
//
// Command line front end. Subcommands: gen, mlevel, sweep, optimize, verify.
// Every run echoes its effective configuration into <out>/manifest.json so
// results can be reproduced bit-identically from the manifest alone.
//
// Exit codes: 0 success, 1 validation error, 2 resource cap, 3 verification
// failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qnoise/closedform.hpp"
#include "qnoise/decomposition.hpp"
#include "qnoise/engine.hpp"
#include "qnoise/errors.hpp"
#include "qnoise/io.hpp"
#include "qnoise/optimize.hpp"
#include "qnoise/parallel.hpp"
#include "qnoise/tradeoff.hpp"
#include "qnoise/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qnoise;

namespace {

struct CommonArgs {
  std::string instance_path;
  std::string gen_spec;  // "n,ensemble,seed"
  std::string noise_name = "depolarizing";
  std::string out_dir;
  std::uint64_t seed = 1;
  int jobs = 0;
};

void add_instance_flags(CLI::App* cmd, CommonArgs& args) {
  auto* instance = cmd->add_option("--instance", args.instance_path, "Instance file (json)");
  auto* gen = cmd->add_option("--gen", args.gen_spec, "Generate instance: n,ensemble,seed");
  instance->excludes(gen);
  gen->excludes(instance);
}

IsingInstance resolve_instance(const CommonArgs& args, json& manifest) {
  if (!args.instance_path.empty()) {
    manifest["instance"] = {{"path", args.instance_path}};
    return read_instance_file(args.instance_path);
  }
  if (!args.gen_spec.empty()) {
    const auto first = args.gen_spec.find(',');
    const auto second = args.gen_spec.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw ValidationError("--gen expects n,ensemble,seed");
    }
    int n = 0;
    std::uint64_t seed = 0;
    try {
      n = std::stoi(args.gen_spec.substr(0, first));
      seed = std::stoull(args.gen_spec.substr(second + 1));
    } catch (const std::exception&) {
      throw ValidationError("--gen expects n,ensemble,seed");
    }
    const std::string ensemble = args.gen_spec.substr(first + 1, second - first - 1);
    manifest["instance"] = {{"generated",
                             {{"n", n}, {"ensemble", ensemble}, {"seed", seed}}}};
    return random_instance(n, ensemble_from_string(ensemble), seed);
  }
  throw ValidationError("exactly one instance source required: --instance or --gen");
}

fs::path prepare_out_dir(const std::string& out) {
  if (out.empty()) throw ValidationError("--out is required");
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create output directory " + out + ": " + ec.message());
  return dir;
}

void write_manifest(const json& manifest, const fs::path& dir) {
  std::ofstream out(dir / "manifest.json");
  if (!out) throw ValidationError("cannot write manifest in " + dir.string());
  out << manifest.dump(2) << "\n";
}

std::vector<double> parse_p_grid(const std::string& spec) {
  // "a:b:steps" inclusive linear grid.
  const auto first = spec.find(':');
  const auto second = spec.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw ValidationError("--p-grid expects a:b:steps");
  }
  double lo = 0.0, hi = 0.0;
  int steps = 0;
  try {
    lo = std::stod(spec.substr(0, first));
    hi = std::stod(spec.substr(first + 1, second - first - 1));
    steps = std::stoi(spec.substr(second + 1));
  } catch (const std::exception&) {
    throw ValidationError("--p-grid expects a:b:steps");
  }
  if (steps < 1) throw ValidationError("--p-grid needs at least one step");
  if (!(lo >= 0.0 && lo <= 1.0 && hi >= 0.0 && hi <= 1.0)) {
    throw ValidationError("--p-grid endpoints must lie in [0, 1]");
  }
  std::vector<double> grid;
  if (steps == 1) {
    grid.push_back(lo);
  } else {
    for (int i = 0; i < steps; ++i) grid.push_back(lo + (hi - lo) * i / (steps - 1));
  }
  return grid;
}

json angles_json(const AngleSchedule& angles) {
  return {{"gammas", angles.gammas}, {"betas", angles.betas}};
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
  int n = 0;
  std::string ensemble = "pm1";
  std::uint64_t seed = 1;
  std::string out_dir;
};

int cmd_gen(const GenArgs& args) {
  const fs::path dir = prepare_out_dir(args.out_dir);
  const IsingInstance instance =
      random_instance(args.n, ensemble_from_string(args.ensemble), args.seed);
  write_instance_file(instance, (dir / "instance.json").string());

  json manifest{{"command", "gen"},
                {"n", args.n},
                {"ensemble", args.ensemble},
                {"seed", args.seed},
                {"outputs", {"instance.json"}}};
  write_manifest(manifest, dir);
  std::cout << "wrote " << (dir / "instance.json").string() << "\n";
  return 0;
}

// --- mlevel ------------------------------------------------------------------

struct MLevelArgs {
  CommonArgs common;
  int depth = 1;
  std::string angles_inline;
  std::string angles_file;
  bool optimize = false;
  int restarts = 20;
  std::uint64_t budget = 2000;
  bool weighted_fit = false;
};

AngleSchedule resolve_angles(const MLevelArgs& args, const IsingInstance& instance,
                             json& manifest) {
  if (!args.angles_inline.empty()) {
    const AngleSchedule angles = parse_angles_inline(args.angles_inline);
    if (angles.depth() != args.depth) {
      throw ValidationError("inline angles do not match --depth");
    }
    manifest["angles"] = {{"source", "inline"}, {"values", angles_json(angles)}};
    return angles;
  }
  if (!args.angles_file.empty()) {
    const AngleSchedule angles = read_angles_file(args.angles_file);
    if (angles.depth() != args.depth) {
      throw ValidationError("angles file does not match --depth");
    }
    manifest["angles"] = {{"source", args.angles_file}, {"values", angles_json(angles)}};
    return angles;
  }
  // Default: optimize noiselessly, as every analysis pipeline does.
  OptimizeOptions options;
  options.restarts = args.restarts;
  options.seed = args.common.seed;
  options.jobs = resolve_jobs(args.common.jobs);
  const OptimizationReport report = optimize_angles(instance, args.depth, std::nullopt, options);
  manifest["angles"] = {{"source", "optimized-noiseless"},
                        {"restarts", args.restarts},
                        {"cost", report.best_cost},
                        {"values", angles_json(report.best_angles)}};
  return report.best_angles;
}

int cmd_mlevel(const MLevelArgs& args) {
  json manifest{{"command", "mlevel"},
                {"depth", args.depth},
                {"noise", args.common.noise_name},
                {"seed", args.common.seed},
                {"budget_per_m", args.budget},
                {"weighted_fit", args.weighted_fit}};
  const IsingInstance instance = resolve_instance(args.common, manifest);
  const fs::path dir = prepare_out_dir(args.common.out_dir);
  const AngleSchedule angles = resolve_angles(args, instance, manifest);
  const NoiseModel noise = make_noise(noise_kind_from_string(args.common.noise_name), 0.5);

  CurveOptions options;
  options.budget_per_m = args.budget;
  options.seed = args.common.seed;
  options.jobs = resolve_jobs(args.common.jobs);
  const MLevelCurves curves = mlevel_curves(instance, angles, noise, options);

  write_curve_file(curves.fidelity, (dir / "fidelity_curve.csv").string());
  write_curve_file(curves.cost, (dir / "cost_curve.csv").string());
  json outputs = json::array({"fidelity_curve.csv", "cost_curve.csv"});

  try {
    FitOptions fit_options;
    fit_options.weight_by_samples = args.weighted_fit;
    const FidelityFit ffit = fit_fidelity(curves.fidelity, fit_options);
    const CostFit cfit = fit_cost(curves.cost, fit_options);
    write_fidelity_fit_file(ffit, (dir / "fidelity_fit.json").string());
    write_cost_fit_file(cfit, (dir / "cost_fit.json").string());
    outputs.push_back("fidelity_fit.json");
    outputs.push_back("cost_fit.json");
  } catch (const FitError& e) {
    manifest["fit_skipped"] = e.what();
    std::cerr << "fit failed: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    // Too few levels to fit (tiny systems); the curves are still written.
    manifest["fit_skipped"] = e.what();
    std::cerr << "fit skipped: " << e.what() << "\n";
  }

  manifest["outputs"] = outputs;
  write_manifest(manifest, dir);
  std::cout << "wrote level curves" << (manifest.contains("fit_skipped") ? "" : " and fits")
            << " to " << dir.string() << "\n";
  return 0;
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
  CommonArgs common;
  std::vector<int> depths{1, 2, 3};
  std::string p_grid_spec;
  std::string angles_file;
  int restarts = 20;
  std::uint64_t budget = 2000;
  bool fit = true;
  bool reoptimize_per_p = false;
};

int cmd_sweep(const SweepArgs& args) {
  json manifest{{"command", "sweep"},
                {"noise", args.common.noise_name},
                {"depths", args.depths},
                {"seed", args.common.seed},
                {"restarts", args.restarts},
                {"budget_per_m", args.budget},
                {"fit", args.fit},
                {"reoptimize_per_p", args.reoptimize_per_p}};
  const IsingInstance instance = resolve_instance(args.common, manifest);
  const fs::path dir = prepare_out_dir(args.common.out_dir);
  const NoiseKind kind = noise_kind_from_string(args.common.noise_name);
  const int jobs = resolve_jobs(args.common.jobs);

  std::vector<int> depths = args.depths;
  std::sort(depths.begin(), depths.end());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  if (depths.empty()) throw ValidationError("--depths needs at least one depth");

  std::vector<double> p_grid =
      args.p_grid_spec.empty() ? default_p_grid() : parse_p_grid(args.p_grid_spec);
  manifest["p_grid"] = p_grid;

  // Angles: from file, or optimized once per depth at p = 0 and reused
  // across the grid (optionally re-optimized under noise at each p).
  std::map<int, AngleSchedule> angles;
  std::map<int, DepthAngles> angle_records;
  std::string angle_source;
  if (!args.angles_file.empty()) {
    angle_source = "file";
    const auto per_depth = read_depth_angles_file(args.angles_file);
    for (int d : depths) {
      const auto it = per_depth.find(d);
      if (it == per_depth.end()) {
        throw ValidationError("angles file has no entry for depth " + std::to_string(d));
      }
      angles[d] = it->second.angles;
      angle_records[d] = it->second;
    }
  } else {
    angle_source = "optimized-noiseless";
    for (int d : depths) {
      OptimizeOptions options;
      options.restarts = args.restarts;
      options.seed = args.common.seed;
      options.jobs = jobs;
      const OptimizationReport report = optimize_angles(instance, d, std::nullopt, options);
      angles[d] = report.best_angles;
      angle_records[d] = {report.best_angles, report.best_cost};
    }
  }
  write_depth_angles_file(angle_records, (dir / "angles.json").string());

  // Per-depth fitted models for the model columns.
  std::map<int, DepthModels> models;
  if (args.fit) {
    json fit_records = json::object();
    for (int d : depths) {
      CurveOptions options;
      options.budget_per_m = args.budget;
      options.seed = args.common.seed;
      options.jobs = jobs;
      const MLevelCurves curves = mlevel_curves(instance, angles[d], make_noise(kind, 0.5),
                                                options);
      DepthModels depth_models;
      json record;
      try {
        const FidelityFit ffit = fit_fidelity(curves.fidelity);
        depth_models.fidelity = ffit;
        record["fidelity"] = {{"alpha", ffit.alpha},
                              {"kappa", ffit.kappa},
                              {"residual", ffit.residual},
                              {"delta", delta_exponent(ffit)}};
        const CostFit cfit = fit_cost(curves.cost);
        depth_models.cost = cfit;
        record["cost"] = {{"alpha", cfit.alpha},
                          {"alpha_tilde", cfit.alpha_tilde},
                          {"chi", cfit.chi},
                          {"residual", cfit.residual}};
        if (cfit.alpha + cfit.alpha_tilde != 0.0) {
          record["cost"]["eta"] = eta_exponent(cfit);
        }
      } catch (const FitError& e) {
        record["failed"] = e.what();
      } catch (const ValidationError& e) {
        record["skipped"] = e.what();
      }
      fit_records[std::to_string(d)] = record;
      models[d] = depth_models;
    }
    std::ofstream fits_out(dir / "fits.json");
    fits_out << fit_records.dump(2) << "\n";
  }

  SweepOptions sweep_options;
  sweep_options.jobs = jobs;
  sweep_options.angle_source = angle_source;
  if (args.reoptimize_per_p) {
    // Re-optimization under noise happens per grid point; the base angles
    // seed each local search.
    sweep_options.angle_source = "optimized-per-p";
  }

  const NoiseModel proto = make_noise(kind, 0.0);
  SweepTable table;
  if (args.reoptimize_per_p) {
    table.n_qubits = instance.n_qubits;
    const std::vector<double> diag = diagonal(instance);
    for (int d : depths) {
      const PureState ideal = qaoa_state(diag, instance.n_qubits, angles[d]);
      for (double p : p_grid) {
        OptimizeOptions options;
        options.restarts = std::max(1, args.restarts / 4);
        options.seed = args.common.seed;
        options.jobs = jobs;
        const NoiseModel noise = make_noise(kind, p);
        const OptimizationReport report =
            optimize_angles(instance, d, p > 0.0 ? std::optional<NoiseModel>(noise) : std::nullopt,
                            options);
        const DensityMatrix rho = noisy_state(diag, instance.n_qubits, report.best_angles, noise);
        SweepRow row;
        row.depth = d;
        row.p = p;
        row.cost_exact = expected_cost_dm(rho, diag);
        row.fidelity_exact = fidelity(rho, qaoa_state(diag, instance.n_qubits, report.best_angles));
        row.angle_source = sweep_options.angle_source;
        if (const auto it = models.find(d); it != models.end()) {
          if (it->second.cost) {
            row.cost_model = model_cost(*it->second.cost, instance.n_qubits * d, p);
          }
          if (it->second.fidelity) {
            row.fidelity_model = model_fidelity(*it->second.fidelity, instance.n_qubits * d, p);
          }
        }
        table.rows.push_back(std::move(row));
      }
    }
  } else {
    table = sweep(instance, depths, p_grid, proto, angles, models, sweep_options);

    // One refinement pass where crossings bunch up within two grid steps.
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i + 1 < depths.size(); ++i) {
      pairs.emplace_back(depths[i], depths[i + 1]);
    }
    if (depths.size() > 2) pairs.emplace_back(depths.front(), depths.back());
    const std::vector<double> extra = refinement_points(table, pairs);
    if (!extra.empty()) {
      manifest["refined_points"] = extra;
      p_grid.insert(p_grid.end(), extra.begin(), extra.end());
      table = sweep(instance, depths, p_grid, proto, angles, models, sweep_options);
    }
  }

  write_sweep_file(table, (dir / "sweep.csv").string());

  std::vector<std::tuple<int, int, double>> crossings;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    for (std::size_t j = i + 1; j < depths.size(); ++j) {
      for (double p_star : find_crossings(table, depths[i], depths[j])) {
        crossings.emplace_back(depths[i], depths[j], p_star);
      }
    }
  }
  write_crossings_file(crossings, (dir / "crossings.csv").string());

  json deviations = json::object();
  for (const auto& [d, dev] : table.max_cost_model_dev) {
    deviations[std::to_string(d)]["cost"] = dev;
  }
  for (const auto& [d, dev] : table.max_fidelity_model_dev) {
    deviations[std::to_string(d)]["fidelity"] = dev;
  }
  manifest["max_model_deviation"] = deviations;
  manifest["outputs"] = {"sweep.csv", "crossings.csv", "angles.json", "fits.json"};
  write_manifest(manifest, dir);
  std::cout << "wrote sweep table (" << table.rows.size() << " rows, "
            << crossings.size() << " crossings) to " << dir.string() << "\n";
  return 0;
}

// --- optimize ----------------------------------------------------------------

struct OptimizeArgs {
  CommonArgs common;
  int depth = 1;
  int restarts = 20;
  std::optional<double> p;
};

int cmd_optimize(const OptimizeArgs& args) {
  json manifest{{"command", "optimize"},
                {"depth", args.depth},
                {"restarts", args.restarts},
                {"seed", args.common.seed}};
  const IsingInstance instance = resolve_instance(args.common, manifest);
  const fs::path dir = prepare_out_dir(args.common.out_dir);

  std::optional<NoiseModel> noise;
  if (args.p) {
    noise = make_noise(noise_kind_from_string(args.common.noise_name), *args.p);
    manifest["noise"] = {{"kind", args.common.noise_name}, {"p", *args.p}};
  } else {
    manifest["noise"] = nullptr;
  }

  OptimizeOptions options;
  options.restarts = args.restarts;
  options.seed = args.common.seed;
  options.jobs = resolve_jobs(args.common.jobs);
  const OptimizationReport report = optimize_angles(instance, args.depth, noise, options);
  write_report_file(report, (dir / "report.json").string());

  manifest["outputs"] = {"report.json"};
  write_manifest(manifest, dir);
  std::cout << "best cost " << report.best_cost << " over " << args.restarts << " restarts\n";
  return 0;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string level = "fast";
  std::string out_dir;
  int jobs = 0;
};

int cmd_verify(const VerifyArgs& args) {
  const std::vector<CheckResult> results =
      run_verification(verify_level_from_string(args.level), resolve_jobs(args.jobs));
  // Human-readable lines on stderr; the machine-readable report goes to the
  // output directory, or to stdout when none was given.
  for (const CheckResult& result : results) {
    std::cerr << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << ": metric "
              << result.metric << " (tol " << result.tolerance << ") - " << result.detail
              << "\n";
  }
  if (args.out_dir.empty()) {
    write_verify_report_json(results, std::cout);
  } else {
    const fs::path dir = prepare_out_dir(args.out_dir);
    write_verify_report_file(results, (dir / "verify_report.json").string());
    json manifest{{"command", "verify"},
                  {"level", args.level},
                  {"outputs", {"verify_report.json"}}};
    write_manifest(manifest, dir);
  }
  return all_passed(results) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA circuits under layered local noise: simulation and analysis"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a random instance file");
  gen->add_option("--n", gen_args.n, "Qubit count")->required();
  gen->add_option("--ensemble", gen_args.ensemble, "pm1, uniform or ring");
  gen->add_option("--seed", gen_args.seed, "Generator seed");
  gen->add_option("--out", gen_args.out_dir, "Output directory")->required();

  MLevelArgs mlevel_args;
  auto* mlevel = app.add_subcommand(
      "mlevel", "Per-insertion-count overlap/cost curves with closed-form fits");
  add_instance_flags(mlevel, mlevel_args.common);
  mlevel->add_option("--depth", mlevel_args.depth, "Circuit depth");
  mlevel->add_option("--noise", mlevel_args.common.noise_name, "depolarizing or dephasing");
  auto* angles_inline_opt =
      mlevel->add_option("--angles", mlevel_args.angles_inline, "Inline angles g,..;b,..");
  auto* angles_file_opt =
      mlevel->add_option("--angles-file", mlevel_args.angles_file, "Angle schedule json");
  angles_inline_opt->excludes(angles_file_opt);
  mlevel->add_flag("--optimize", mlevel_args.optimize,
                   "Optimize angles (default when no angles are given)")
      ->excludes(angles_inline_opt)
      ->excludes(angles_file_opt);
  mlevel->add_option("--restarts", mlevel_args.restarts, "Optimizer restarts");
  mlevel->add_option("--budget", mlevel_args.budget, "Patterns per level before sampling");
  mlevel->add_flag("--weighted-fit", mlevel_args.weighted_fit, "Weight fits by sample counts");
  mlevel->add_option("--seed", mlevel_args.common.seed, "Seed");
  mlevel->add_option("--jobs", mlevel_args.common.jobs, "Worker threads (0 = auto)");
  mlevel->add_option("--out", mlevel_args.common.out_dir, "Output directory")->required();

  SweepArgs sweep_args;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Cost/fidelity vs noise strength across depths");
  add_instance_flags(sweep_cmd, sweep_args.common);
  sweep_cmd->add_option("--depths", sweep_args.depths, "Depth list")->delimiter(',');
  sweep_cmd->add_option("--p-grid", sweep_args.p_grid_spec,
                        "a:b:steps (default: 51 points plus fine prefix)");
  sweep_cmd->add_option("--noise", sweep_args.common.noise_name, "depolarizing or dephasing");
  sweep_cmd->add_option("--angles-file", sweep_args.angles_file, "Per-depth angle json");
  sweep_cmd->add_option("--restarts", sweep_args.restarts, "Optimizer restarts per depth");
  sweep_cmd->add_option("--budget", sweep_args.budget, "Patterns per level before sampling");
  sweep_cmd->add_flag("--fit,!--no-fit", sweep_args.fit, "Fit closed-form models (default on)");
  sweep_cmd->add_flag("--reoptimize-per-p", sweep_args.reoptimize_per_p,
                      "Re-optimize angles at each grid point under noise");
  sweep_cmd->add_option("--seed", sweep_args.common.seed, "Seed");
  sweep_cmd->add_option("--jobs", sweep_args.common.jobs, "Worker threads (0 = auto)");
  sweep_cmd->add_option("--out", sweep_args.common.out_dir, "Output directory")->required();

  OptimizeArgs optimize_args;
  auto* optimize_cmd = app.add_subcommand("optimize", "Multi-restart angle optimization");
  add_instance_flags(optimize_cmd, optimize_args.common);
  optimize_cmd->add_option("--depth", optimize_args.depth, "Circuit depth");
  optimize_cmd->add_option("--restarts", optimize_args.restarts, "Restarts");
  double p_value = -1.0;
  auto* p_opt = optimize_cmd->add_option(
      "--p", p_value, "Optimize the noisy objective at this strength (default: noiseless)");
  optimize_cmd->add_option("--noise", optimize_args.common.noise_name,
                           "depolarizing or dephasing");
  optimize_cmd->add_option("--seed", optimize_args.common.seed, "Seed");
  optimize_cmd->add_option("--jobs", optimize_args.common.jobs, "Worker threads (0 = auto)");
  optimize_cmd->add_option("--out", optimize_args.common.out_dir, "Output directory")->required();

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-engine equivalence checks (fast or full)");
  verify_cmd->add_option("--level", verify_args.level, "fast or full");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads (0 = auto)");
  verify_cmd->add_option("--out", verify_args.out_dir, "Optional report directory");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (mlevel->parsed()) return cmd_mlevel(mlevel_args);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
    if (optimize_cmd->parsed()) {
      if (*p_opt) optimize_args.p = p_value;
      return cmd_optimize(optimize_args);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
