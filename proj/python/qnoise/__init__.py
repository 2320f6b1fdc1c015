# Copyright 2026 The qnoise authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""QAOA circuits under layered local noise.

Exact pure-state and density-matrix engines, the pure-state decomposition of
the noisy state over noise-insertion patterns, closed-form fidelity/cost
models, angle optimization, and depth-versus-noise trade-off analysis. The
heavy lifting lives in the compiled `_core` extension.
"""

from qnoise._core import (  # noqa: F401
    AngleSchedule,
    CheckResult,
    CostFit,
    DensityMatrix,
    DepthCostModel,
    FidelityFit,
    GroundState,
    IsingInstance,
    MLevel,
    MLevelCurve,
    MonteCarloResult,
    NoiseModel,
    NoisePattern,
    OptimizationReport,
    PatternEntry,
    PureState,
    ResourceError,
    SweepRow,
    SweepTable,
    UnsupportedModelError,
    ValidationError,
    apply_local_channel,
    assemble_density_matrix,
    c_curve,
    custom_channel,
    default_p_grid,
    delta_exponent,
    dephasing,
    depolarizing,
    diagonal,
    eta_exponent,
    expected_cost_dm,
    expected_cost_pure,
    f_curve,
    fidelity,
    find_crossings,
    fit_cost,
    fit_fidelity,
    ground_energy,
    haar_cost,
    make_noise,
    make_pattern,
    model_cost,
    model_fidelity,
    monte_carlo,
    noisy_state,
    objective,
    optimal_depth,
    optimize_angles,
    pattern_count,
    plus_state,
    qaoa_state,
    random_instance,
    read_instance_file,
    reconstruct_cost,
    reconstruct_fidelity,
    run_verification,
    sweep,
    trace_distance,
    trajectory_state,
    write_curve_file,
    write_instance_file,
    write_sweep_file,
)

__version__ = "0.1.0"
