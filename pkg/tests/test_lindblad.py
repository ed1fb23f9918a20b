import cmath
import math
from dataclasses import replace

import numpy as np
import pytest

from helpers import pair_rel_err, random_density, random_params
from morsim import (
    DensityMatrix,
    GeneratorMatrix,
    ParameterError,
    SystemParams,
    build_generator,
    probe_response_finite,
    probe_response_perturbative,
    s_no_control,
    s_pair,
    steady_state,
)

FIG3_BASE = SystemParams(Omega=5.0, Delta=5.0, G1=20.0, G2=0.0, alpha_l=30.0)


def test_generator_conserves_trace():
    rng = np.random.default_rng(31)
    for _ in range(100):
        p = random_params(rng, equal_gammas=False)
        gen = build_generator(p, g1=rng.uniform(0, 0.01), g2=rng.uniform(0, 0.01))
        drho = gen.apply(random_density(rng))
        assert abs(np.trace(drho)) < 1e-12


def test_generator_preserves_hermiticity():
    rng = np.random.default_rng(32)
    for _ in range(100):
        p = random_params(rng, equal_gammas=False)
        gen = build_generator(p, g1=0.005j, g2=0.003)
        drho = gen.apply(random_density(rng))
        assert np.max(np.abs(drho - drho.conj().T)) < 1e-12


def test_spontaneous_decay_of_sublevel_population():
    p = SystemParams(gamma1=1.3, gamma2=0.7)
    gen = build_generator(p, g1=0.0, g2=0.0)
    rho = np.zeros((4, 4), dtype=complex)
    rho[1, 1] = 1.0  # all population in |1>
    drho = gen.apply(rho)
    assert drho[1, 1] == pytest.approx(-2 * p.gamma1)
    assert drho[3, 3] == pytest.approx(+2 * p.gamma1)
    assert np.max(np.abs(drho - np.diag(np.diag(drho)))) == 0.0


def test_upper_coherence_decay_coefficient():
    # Self-coefficient of rho_e1: -(Gamma1 + Gamma2 + gamma1 + i(Delta - Omega)).
    p = SystemParams(gamma1=1.5, gamma2=0.9, Gamma1=1.1, Gamma2=0.4,
                     Omega=2.0, Delta=3.0, delta=-1.0, G1=5.0, G2=7.0)
    gen = build_generator(p, g1=0.001, g2=0.001)
    row, col = 4 * 0 + 1, 4 * 0 + 1  # rho_e1 equation, rho_e1 element
    assert gen.matrix[row, col] == -(1.1 + 0.4 + 1.5 + 1j * (3.0 - 2.0))


def test_zero_probe_steady_state_is_ground():
    rng = np.random.default_rng(33)
    for _ in range(20):
        p = random_params(rng, equal_gammas=False)
        rho = steady_state(build_generator(p, g1=0.0, g2=0.0)).rho
        expected = np.diag([0.0, 0.0, 0.0, 1.0])
        assert np.max(np.abs(rho - expected)) < 1e-12


def test_steady_state_invariants_on_random_draws():
    rng = np.random.default_rng(34)
    for _ in range(100):
        p = random_params(rng, equal_gammas=False)
        gen = build_generator(p, g1=rng.uniform(1e-5, 0.01), g2=rng.uniform(1e-5, 0.01))
        state = steady_state(gen)  # DensityMatrix validates on construction
        residual = np.linalg.norm(gen.matrix @ state.rho.reshape(16))
        assert residual <= 1e-10 * np.linalg.norm(gen.matrix)
        assert state.populations.min() >= -1e-12


def test_steady_state_residual_at_reference_point():
    gen = build_generator(replace(FIG3_BASE, delta=0.3), g1=1e-3, g2=0.0)
    rho = steady_state(gen).rho
    residual = np.linalg.norm(gen.matrix @ rho.reshape(16))
    assert residual <= 1e-10 * np.linalg.norm(gen.matrix)


def test_perturbative_matches_bare_medium_without_control():
    rng = np.random.default_rng(35)
    for _ in range(100):
        p = random_params(rng, g_max=0.0, equal_gammas=False)
        assert pair_rel_err(probe_response_perturbative(p), s_no_control(p)) < 1e-12


def test_perturbative_matches_closed_form_on_strong_control_grid():
    base = SystemParams(Omega=0.0, Delta=0.0, G1=50.0, G2=0.0)
    for delta in np.linspace(-150.0, 150.0, 1000):
        p = replace(base, delta=float(delta))
        assert pair_rel_err(s_pair(p), probe_response_perturbative(p)) <= 1e-8


def test_perturbative_is_probe_normalization_invariant():
    p = replace(FIG3_BASE, delta=2.5, G2=3.0)
    one = probe_response_perturbative(p, probe_amplitude=1.0)
    two = probe_response_perturbative(p, probe_amplitude=2.0)
    assert pair_rel_err(one, two) < 1e-13


def test_finite_probe_agrees_with_perturbative_at_small_amplitude():
    p = replace(FIG3_BASE, delta=0.3)
    weak = probe_response_finite(p, 1e-4)
    pert = probe_response_perturbative(p)
    assert pair_rel_err(weak, pert) < 1e-6


def test_finite_probe_discrepancy_is_quadratic():
    p = replace(FIG3_BASE, delta=0.3)
    pert = probe_response_perturbative(p)

    def discrepancy(g):
        fin = probe_response_finite(p, g)
        return math.hypot(abs(fin.s_plus - pert.s_plus), abs(fin.s_minus - pert.s_minus))

    d1, d2 = discrepancy(1e-3), discrepancy(5e-4)
    assert d1 / d2 == pytest.approx(4.0, rel=0.15)

    gs = np.array([1e-3, 5e-4, 2.5e-4])
    errs = np.array([discrepancy(g) for g in gs])
    order = np.polyfit(np.log(gs), np.log(errs), 1)[0]
    assert 1.8 <= order <= 2.2


def test_finite_probe_rejects_out_of_range_amplitudes():
    with pytest.raises(ParameterError, match="probe too strong"):
        probe_response_finite(FIG3_BASE, 0.1)
    with pytest.raises(ParameterError, match="nonpositive"):
        probe_response_finite(FIG3_BASE, 0.0)
    with pytest.raises(ParameterError, match="nonpositive"):
        probe_response_finite(FIG3_BASE, -1e-3)


def test_probe_phase_covariance():
    p = replace(FIG3_BASE, delta=0.3)
    g = 1e-3
    phase = cmath.exp(0.77j)
    plain = steady_state(build_generator(p, g1=g, g2=0.0)).rho
    rotated = steady_state(build_generator(p, g1=g * phase, g2=0.0)).rho
    # rho_1g follows the drive phase; the extracted response does not.
    assert rotated[1, 3] == pytest.approx(plain[1, 3] * phase, rel=1e-12)
    assert rotated[1, 3] / (g * phase) == pytest.approx(plain[1, 3] / g, rel=1e-12)


def test_finite_probe_supports_unequal_gammas():
    p = SystemParams(gamma1=1.2, gamma2=0.8, Omega=2.0, Delta=1.0,
                     delta=0.5, G1=8.0, G2=3.0)
    fin = probe_response_finite(p, 1e-4)
    pert = probe_response_perturbative(p)
    assert pair_rel_err(fin, pert) < 1e-6


def test_density_matrix_validation():
    with pytest.raises(ParameterError, match="4x4"):
        DensityMatrix(np.eye(3, dtype=complex))
    bad_herm = np.diag([0.0, 0.0, 0.0, 1.0]).astype(complex)
    bad_herm[0, 1] = 1e-6
    with pytest.raises(ParameterError, match="Hermitian"):
        DensityMatrix(bad_herm)
    with pytest.raises(ParameterError, match="trace"):
        DensityMatrix(np.diag([0.0, 0.0, 0.0, 2.0]).astype(complex))
    with pytest.raises(ParameterError, match="population"):
        DensityMatrix(np.diag([-0.5, 0.0, 0.5, 1.0]).astype(complex))


def test_generator_matrix_validation():
    with pytest.raises(ParameterError, match="16x16"):
        GeneratorMatrix(np.zeros((4, 4), dtype=complex), g1=0.0, g2=0.0)
