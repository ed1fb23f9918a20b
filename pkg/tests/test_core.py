import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from morsim import (
    JonesVector,
    ParameterError,
    SystemParams,
    cartesian_to_circular,
    circular_to_cartesian,
    preset,
    validate_params,
)

SQRT2 = math.sqrt(2.0)

finite_complex = st.complex_numbers(
    max_magnitude=1e8, allow_nan=False, allow_infinity=False
)


def test_default_params_are_valid():
    p = SystemParams()
    assert validate_params(p) is p


def test_reference_parameter_set_is_valid():
    p = SystemParams(gamma1=1, gamma2=1, Gamma1=1, Gamma2=1,
                     Omega=0, Delta=0, delta=0, G1=0, G2=0, alpha_l=30)
    assert validate_params(p) is p


@pytest.mark.parametrize("name", ["fig2", "fig3", "fig4"])
def test_preset_parameter_sets_are_valid(name):
    cfg = preset(name)
    for variant in cfg.variants:
        validate_params(variant.apply(cfg.base))


@pytest.mark.parametrize(
    "kwargs, fragment",
    [
        ({"gamma1": -1.0}, "gamma1"),
        ({"gamma1": 0.0}, "gamma1"),
        ({"gamma2": -0.5}, "gamma2"),
        ({"Gamma1": -0.1}, "Gamma1"),
        ({"Gamma2": -2.0}, "Gamma2"),
        ({"Gamma1": 0.0, "Gamma2": 0.0}, "undamped"),
        ({"alpha_l": -1.0}, "alpha_l"),
        ({"Omega": math.nan}, "Omega"),
        ({"G1": complex("inf")}, "G1"),
    ],
)
def test_invalid_params_name_first_violation(kwargs, fragment):
    with pytest.raises(ParameterError, match=fragment):
        validate_params(SystemParams(**kwargs))


def test_x_polarized_splits_evenly():
    j = cartesian_to_circular(1.5, 0.0)
    assert j.e_plus == pytest.approx(1.5 / SQRT2)
    assert j.e_minus == pytest.approx(1.5 / SQRT2)


def test_y_polarized_components():
    j = cartesian_to_circular(0.0, 2.0)
    assert j.e_plus == pytest.approx(-2j / SQRT2)
    assert j.e_minus == pytest.approx(2j / SQRT2)


def test_pure_sigma_plus_in_cartesian():
    ex, ey = circular_to_cartesian(JonesVector(1.0, 0.0))
    assert ex == pytest.approx(1 / SQRT2)
    assert ey == pytest.approx(1j / SQRT2)


def test_equal_components_recombine_to_x():
    ex, ey = circular_to_cartesian(JonesVector(1 / SQRT2, 1 / SQRT2))
    assert ex == pytest.approx(1.0)
    assert ey == pytest.approx(0.0, abs=1e-15)


@given(ex=finite_complex, ey=finite_complex)
def test_round_trip_recovers_input(ex, ey):
    back_ex, back_ey = circular_to_cartesian(cartesian_to_circular(ex, ey))
    scale = math.hypot(abs(ex), abs(ey))
    assert abs(back_ex - ex) <= 1e-12 * scale
    assert abs(back_ey - ey) <= 1e-12 * scale


@given(ex=finite_complex, ey=finite_complex)
def test_conversion_preserves_intensity(ex, ey):
    j = cartesian_to_circular(ex, ey)
    cart = abs(ex) ** 2 + abs(ey) ** 2
    assert j.intensity == pytest.approx(cart, rel=1e-12, abs=1e-300)


@given(ep=finite_complex, em=finite_complex)
def test_inverse_direction_round_trip(ep, em):
    j = JonesVector(ep, em)
    back = cartesian_to_circular(*circular_to_cartesian(j))
    scale = math.hypot(abs(ep), abs(em))
    assert abs(back.e_plus - j.e_plus) <= 1e-12 * scale
    assert abs(back.e_minus - j.e_minus) <= 1e-12 * scale


def test_params_coerce_numeric_types():
    p = SystemParams(gamma1=1, G1=20)
    assert isinstance(p.gamma1, float)
    assert isinstance(p.G1, complex)


def test_random_conversions_preserve_norm():
    rng = np.random.default_rng(11)
    for _ in range(200):
        ex, ey = rng.normal(size=2) + 1j * rng.normal(size=2)
        j = cartesian_to_circular(ex, ey)
        assert j.intensity == pytest.approx(abs(ex) ** 2 + abs(ey) ** 2, rel=1e-12)
