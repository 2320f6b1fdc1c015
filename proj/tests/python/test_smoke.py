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

import math

import numpy as np
import pytest

import qnoise


def field_instance():
    inst = qnoise.IsingInstance()
    inst.n_qubits = 1
    inst.fields = [(0, 1.0)]
    return inst


def test_plus_state_amplitudes():
    state = qnoise.plus_state(2)
    np.testing.assert_allclose(state.amplitudes, 0.5 * np.ones(4), atol=1e-15)


def test_instance_diagonal_and_ground():
    inst = qnoise.random_instance(4, "pm1", 3)
    diag = np.asarray(qnoise.diagonal(inst))
    assert diag.shape == (16,)
    assert abs(diag.sum()) < 1e-12
    gs = qnoise.ground_energy(inst)
    assert gs.energy == pytest.approx(diag.min())


def test_single_qubit_fidelity_law():
    inst = field_instance()
    angles = qnoise.AngleSchedule([0.0], [0.0])
    plus = qnoise.qaoa_state(inst, angles)
    for p in (0.0, 0.25, 0.5, 1.0):
        rho = qnoise.noisy_state(inst, angles, qnoise.depolarizing(p))
        assert qnoise.fidelity(rho, plus) == pytest.approx(1.0 - p / 2.0, abs=1e-12)


def test_decomposition_matches_engine():
    inst = qnoise.random_instance(2, "uniform", 7)
    angles = qnoise.AngleSchedule([0.6], [0.4])
    noise = qnoise.depolarizing(0.3)
    direct = qnoise.noisy_state(inst, angles, noise)
    assembled = qnoise.assemble_density_matrix(inst, angles, noise, max_terms=10**6)
    assert qnoise.trace_distance(direct, assembled) < 1e-10


def test_level_curve_reconstruction():
    inst = qnoise.random_instance(3, "pm1", 11)
    angles = qnoise.AngleSchedule([0.8], [0.3])
    noise = qnoise.depolarizing(0.5)
    curve = qnoise.f_curve(inst, angles, noise, budget_per_m=10**6)
    assert curve.levels[0].mean == 1.0
    rho = qnoise.noisy_state(inst, angles, qnoise.depolarizing(0.4))
    ideal = qnoise.qaoa_state(inst, angles)
    assert qnoise.reconstruct_fidelity(curve, 0.4) == pytest.approx(
        qnoise.fidelity(rho, ideal), abs=1e-10
    )


def test_fit_and_exponents():
    assert qnoise.delta_exponent(qnoise.FidelityFit(0.9958, 2.71)) == pytest.approx(
        0.63, abs=0.005
    )
    assert qnoise.eta_exponent(qnoise.CostFit(1.04, -7.41, 1.32)) == pytest.approx(
        0.28, abs=0.005
    )

    curve = qnoise.f_curve(
        qnoise.random_instance(4, "pm1", 13),
        qnoise.AngleSchedule([0.7], [0.5]),
        qnoise.depolarizing(0.5),
        budget_per_m=10**6,
    )
    fit = qnoise.fit_fidelity(curve)
    assert fit.kappa > 1.0
    assert qnoise.model_fidelity(fit, curve.n_slots, 0.0) == pytest.approx(1.0)


def test_optimizer_single_qubit():
    report = qnoise.optimize_angles(field_instance(), 1, None, restarts=8, seed=4)
    assert report.best_cost == pytest.approx(-1.0, abs=1e-6)
    assert all(0.0 <= g < 2 * math.pi for g in report.best_angles.gammas)


def test_monte_carlo_consistency():
    inst = qnoise.random_instance(3, "pm1", 17)
    angles = qnoise.AngleSchedule([0.7], [0.4])
    noise = qnoise.depolarizing(0.2)
    mc = qnoise.monte_carlo(inst, angles, noise, trials=4000, seed=2)
    rho = qnoise.noisy_state(inst, angles, noise)
    exact = qnoise.expected_cost_dm(rho, qnoise.diagonal(inst))
    assert abs(mc.cost_mean - exact) < 5 * mc.cost_stderr


def test_sweep_and_crossings():
    inst = qnoise.random_instance(3, "pm1", 19)
    angles = {
        1: qnoise.optimize_angles(inst, 1, None, restarts=4, seed=1).best_angles,
        2: qnoise.optimize_angles(inst, 2, None, restarts=4, seed=1).best_angles,
    }
    grid = [0.0, 0.25, 0.5, 0.75, 1.0]
    table = qnoise.sweep(inst, [1, 2], grid, qnoise.depolarizing(0.0), angles)
    assert len(table.rows) == 10
    last = table.rows[-1]
    assert last.p == 1.0
    assert last.fidelity_exact == pytest.approx(2.0**-3, abs=1e-10)
    qnoise.find_crossings(table, 1, 2)  # well-formed, may be empty


def test_validation_errors_map_to_python():
    with pytest.raises(ValueError):
        qnoise.random_instance(3, "gaussian", 1)
    with pytest.raises(ValueError):
        qnoise.AngleSchedule([0.1], [])


def test_verification_fast():
    results = qnoise.run_verification("fast", jobs=2)
    assert results and all(r.passed for r in results)
