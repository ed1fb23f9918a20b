"""Measurable quantities derived from a susceptibility pair.

A uniform slab of optical depth scale ``alpha_l`` multiplies each
circular component by ``exp(i * alpha_l * s / 2)``; the polarimetry
signals follow from recombining the two components.
"""

from __future__ import annotations

import cmath

from .core import JonesVector, SusceptibilityPair
from .errors import ParameterError

__all__ = [
    "transmission_y",
    "transmission_x",
    "rotation_angle",
    "output_field",
]


def _phase_factors(s: SusceptibilityPair, alpha_l: float) -> tuple[complex, complex]:
    if alpha_l < 0:
        raise ParameterError(f"negative alpha_l: {alpha_l}")
    return (cmath.exp(0.5j * alpha_l * s.s_plus),
            cmath.exp(0.5j * alpha_l * s.s_minus))


def transmission_y(s: SusceptibilityPair, alpha_l: float) -> float:
    """Crossed-polarizer transmission for x-polarized input.

    ``T_y = |exp(i al s+/2) - exp(i al s-/2)|^2 / 4``, normalized to the
    input intensity.  Vanishes when the medium responds isotropically
    (s+ == s-) and is symmetric under exchanging the two components.
    """
    f_plus, f_minus = _phase_factors(s, alpha_l)
    return 0.25 * abs(f_plus - f_minus) ** 2


def transmission_x(s: SusceptibilityPair, alpha_l: float) -> float:
    """Co-polarized transmission, ``|exp(i al s+/2) + exp(i al s-/2)|^2 / 4``.

    With passive media (nonnegative Im s) ``T_x + T_y <= 1``; for purely
    real pairs the sum is exactly 1.
    """
    f_plus, f_minus = _phase_factors(s, alpha_l)
    return 0.25 * abs(f_plus + f_minus) ** 2


def rotation_angle(s: SusceptibilityPair, alpha_l: float) -> float:
    """Polarization rotation angle in radians, ``alpha_l/4 * Re(s- - s+)``.

    This is the lossless-limit expression (exact when both s are real);
    with absorbing media the crossed-polarizer signal
    :func:`transmission_y` is the operational observable.
    """
    if alpha_l < 0:
        raise ParameterError(f"negative alpha_l: {alpha_l}")
    return 0.25 * alpha_l * (s.s_minus.real - s.s_plus.real)


def output_field(e_in: JonesVector, s: SusceptibilityPair, alpha_l: float) -> JonesVector:
    """Field after the slab: each circular component picks up its
    ``exp(i * alpha_l * s / 2)`` factor."""
    f_plus, f_minus = _phase_factors(s, alpha_l)
    return JonesVector(e_plus=e_in.e_plus * f_plus,
                       e_minus=e_in.e_minus * f_minus)
