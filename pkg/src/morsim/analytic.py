"""Closed-form scaled susceptibilities of the driven four-level medium.

For equal lower decay rates (gamma1 == gamma2 == gamma) the weak-probe
response of each circular component has an exact rational form.  With

    d+  = gamma + i(delta + Omega)         sigma+ coherence factor
    d-  = gamma + i(delta - Omega)         sigma- coherence factor
    q   = Gamma1 + Gamma2 + i(Delta + delta)   two-photon coherence factor

the pair is

    s+ = i gamma [ |G2|^2 + d- q ] / ( |G2|^2 d+ + d- [ |G1|^2 + d+ q ] )
    s- = i gamma [ |G1|^2 + d+ q ] / ( |G1|^2 d- + d+ [ |G2|^2 + d- q ] )

The grouping above is evaluated verbatim (no algebraic reshuffling) so
the code can be audited term by term; the density-matrix engine in
:mod:`morsim.lindblad` provides the independent numerical check.
"""

from __future__ import annotations

import math

from .core import SusceptibilityPair, SystemParams, validate_params
from .errors import NumericError, ParameterError

__all__ = [
    "s_pair",
    "s_no_control",
    "s_plus_sigma_minus_control",
    "chi_from_s",
]

# Below this magnitude (gamma-scaled units) a response denominator is
# treated as numerically degenerate rather than divided through.
DENOMINATOR_GUARD = 1e-12


def _factors(p: SystemParams) -> tuple[complex, complex, complex]:
    d_plus = p.gamma1 + 1j * (p.delta + p.Omega)
    d_minus = p.gamma1 + 1j * (p.delta - p.Omega)
    two_photon = p.Gamma1 + p.Gamma2 + 1j * (p.Delta + p.delta)
    return d_plus, d_minus, two_photon


def _require_equal_gammas(p: SystemParams) -> None:
    if p.gamma1 != p.gamma2:
        raise ParameterError(
            f"unequal gammas: closed forms hold only for gamma1 == gamma2 "
            f"(got {p.gamma1} and {p.gamma2}); use the density-matrix engine"
        )


def s_pair(p: SystemParams) -> SusceptibilityPair:
    """Closed-form (s+, s-) for equal lower decay rates.

    Depends on the control amplitudes only through |G1|^2 and |G2|^2.

    Raises
    ------
    ParameterError
        If ``p`` is invalid or ``gamma1 != gamma2``.
    NumericError
        If either denominator magnitude falls below the guard; for
        positive gamma this has not been observed, but a degenerate
        denominator must surface as an error, not as a huge value.
    """
    validate_params(p)
    _require_equal_gammas(p)
    gamma = p.gamma1
    g1_sq = abs(p.G1) ** 2
    g2_sq = abs(p.G2) ** 2
    d_plus, d_minus, q = _factors(p)

    num_plus = 1j * gamma * (g2_sq + d_minus * q)
    den_plus = g2_sq * d_plus + d_minus * (g1_sq + d_plus * q)
    num_minus = 1j * gamma * (g1_sq + d_plus * q)
    den_minus = g1_sq * d_minus + d_plus * (g2_sq + d_minus * q)

    if abs(den_plus) < DENOMINATOR_GUARD or abs(den_minus) < DENOMINATOR_GUARD:
        raise NumericError(
            f"vanishing denominator in closed-form susceptibility "
            f"(|den+|={abs(den_plus):.3e}, |den-|={abs(den_minus):.3e}) at {p}"
        )
    return SusceptibilityPair(s_plus=num_plus / den_plus,
                              s_minus=num_minus / den_minus)


def s_no_control(p: SystemParams) -> SusceptibilityPair:
    """Bare-medium response ``s(+/-) = gamma / ((delta +/- Omega) - i gamma)``.

    Equals :func:`s_pair` at ``G1 = G2 = 0``.  Unequal lower rates are
    supported by using ``gamma1`` for s+ and ``gamma2`` for s-.
    """
    validate_params(p)
    s_plus = p.gamma1 / ((p.delta + p.Omega) - 1j * p.gamma1)
    s_minus = p.gamma2 / ((p.delta - p.Omega) - 1j * p.gamma2)
    return SusceptibilityPair(s_plus=s_plus, s_minus=s_minus)


def s_plus_sigma_minus_control(p: SystemParams) -> complex:
    """s+ for a purely sigma- polarized control field (``G2 = 0``).

    Reduces to ``i gamma q / (|G1|^2 + d+ q)``; for large |G1| its real
    and imaginary parts develop the Autler-Townes doublet.  Must agree
    with ``s_pair(p).s_plus`` to machine precision.
    """
    validate_params(p)
    _require_equal_gammas(p)
    if p.G2 != 0:
        raise ParameterError(f"G2 nonzero: {p.G2} (sigma- control case requires G2 = 0)")
    gamma = p.gamma1
    d_plus, _, q = _factors(p)
    den = abs(p.G1) ** 2 + d_plus * q
    if abs(den) < DENOMINATOR_GUARD:
        raise NumericError(
            f"vanishing denominator in sigma- control form (|den|={abs(den):.3e}) at {p}"
        )
    return 1j * gamma * q / den


def chi_from_s(s: complex, alpha: float, k: float) -> complex:
    """Physical susceptibility ``chi = alpha/(4 pi k) * s``."""
    if not (k > 0):
        raise ParameterError(f"nonpositive wavenumber: {k}")
    if alpha < 0:
        raise ParameterError(f"negative absorption coefficient: {alpha}")
    return (alpha / (4.0 * math.pi * k)) * complex(s)
