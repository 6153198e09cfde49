"""Structural and dynamical resonance loci and the dynamical shift.

The structural resonance minimizes the dressed-level splitting eps3 - eps2;
the dynamical resonance maximizes the bare-state 1 -> 3 transfer. Both are
located on the avoided crossing at delta1 ~ delta2 (the delta1 ~ 0 crossing
is out of scope). The two loci differ by the dynamical shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._minimize import maximize_scalar, minimize_scalar
from .dynamics import transfer_supremum
from .errors import BracketError
from .hamiltonian import RamanParams, gap32

# Search bracket around the delta1 ~ delta2 crossing, in units of delta2.
BRACKET_LO = 0.5
BRACKET_HI = 1.5
_EDGE_MARGIN = 1e-4

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class ResonanceReport:
    """All resonance loci (delta1 values) plus the exact/approximate shift."""

    structural_exact: float
    structural_approx: float
    dynamical_exact_effective: float
    dynamical_exact_full: float
    dynamical_approx: float
    shift_exact: float
    shift_approx: float


def _check_interior(x: float, params: RamanParams, what: str) -> float:
    d2 = params.delta2
    if x - BRACKET_LO * d2 < _EDGE_MARGIN * d2 or BRACKET_HI * d2 - x < _EDGE_MARGIN * d2:
        raise BracketError(
            f"{what} locus {x:g} is at the edge of the search bracket "
            f"[{BRACKET_LO * d2:g}, {BRACKET_HI * d2:g}]; parameters are outside "
            "the isolated-crossing regime"
        )
    return x


def structural_exact(params: RamanParams, tol: float = DEFAULT_TOL) -> float:
    """delta1 minimizing the full-model splitting gap32 over the crossing bracket."""
    if params.omega1 * params.omega2 <= 0:
        raise BracketError("structural resonance requires omega1 * omega2 > 0")
    if tol <= 0:
        raise ValueError("tol must be positive")
    d2 = params.delta2
    x, _ = minimize_scalar(
        lambda d1: gap32(params.with_delta1(d1)),
        BRACKET_LO * d2,
        BRACKET_HI * d2,
        xtol=tol * d2,
    )
    return _check_interior(x, params, "structural")


def structural_approx(params: RamanParams) -> float:
    """Fourth-order closed-form estimate of the structural locus."""
    o1sq, o2sq = params.omega1**2, params.omega2**2
    d2 = params.delta2
    diff = o2sq - o1sq
    return d2 + diff / (4.0 * d2) - diff**2 / (16.0 * d2**3) + o1sq * o2sq / (4.0 * d2**3)


def dynamical_exact_effective(params: RamanParams) -> float:
    """Exact dynamical locus of the effective model: the delta_eff = 0 root."""
    disc = params.delta2**2 + params.omega2**2 - params.omega1**2
    if disc < 0:
        raise ValueError(
            "delta2^2 + omega2^2 - omega1^2 < 0: no real delta_eff = 0 root "
            "(outside effective-model validity)"
        )
    return 0.5 * (params.delta2 + math.sqrt(disc))


def dynamical_exact_full(params: RamanParams, tol: float = DEFAULT_TOL) -> float:
    """delta1 maximizing the full-model transfer amplitude over the bracket."""
    if params.omega1 * params.omega2 <= 0:
        raise BracketError("dynamical resonance requires omega1 * omega2 > 0")
    if tol <= 0:
        raise ValueError("tol must be positive")
    d2 = params.delta2
    x, _ = maximize_scalar(
        lambda d1: transfer_supremum(params.with_delta1(d1)),
        BRACKET_LO * d2,
        BRACKET_HI * d2,
        xtol=tol * d2,
    )
    return _check_interior(x, params, "dynamical")


def dynamical_approx(params: RamanParams) -> float:
    """Fourth-order closed-form estimate of the dynamical locus."""
    diff = params.omega2**2 - params.omega1**2
    d2 = params.delta2
    return d2 + diff / (4.0 * d2) - diff**2 / (16.0 * d2**3)


def shift_approx(params: RamanParams) -> float:
    """Lowest-order dynamical shift omega1^2 omega2^2 / (4 delta2^3)."""
    return params.omega1**2 * params.omega2**2 / (4.0 * params.delta2**3)


def dynamical_shift(params: RamanParams, tol: float = DEFAULT_TOL):
    """(shift_exact, shift_approx): structural minus dynamical locus, and
    its lowest-order closed form."""
    exact = structural_exact(params, tol) - dynamical_exact_full(params, tol)
    return exact, shift_approx(params)


def resonance_report(params: RamanParams, tol: float = DEFAULT_TOL) -> ResonanceReport:
    """Compute every locus and the shift in one pass."""
    s_exact = structural_exact(params, tol)
    d_full = dynamical_exact_full(params, tol)
    return ResonanceReport(
        structural_exact=s_exact,
        structural_approx=structural_approx(params),
        dynamical_exact_effective=dynamical_exact_effective(params),
        dynamical_exact_full=d_full,
        dynamical_approx=dynamical_approx(params),
        shift_exact=s_exact - d_full,
        shift_approx=shift_approx(params),
    )


@dataclass(frozen=True)
class ShiftScanRow:
    ratio: float
    shift_exact: float
    shift_approx: float


def shift_scan(omega2: float, ratio_grid, tol: float = DEFAULT_TOL, delta2: float = 1.0):
    """Dynamical shift versus coupling ratio omega1/omega2 at fixed omega2.

    Returns (rows, skipped) where rows are ShiftScanRow in grid order and
    skipped collects (ratio, diagnostic) for bracket failures.
    """
    if omega2 > 0.6 * delta2:
        raise ValueError("omega2 must be <= 0.6 delta2 for a meaningful scan")
    rows = []
    skipped = []
    for ratio in ratio_grid:
        r = float(ratio)
        if not 0.0 < r <= 1.5:
            raise ValueError(f"ratio {r:g} outside (0, 1.5]")
        params = RamanParams(omega1=r * omega2, omega2=omega2, delta1=delta2, delta2=delta2)
        try:
            exact, approx = dynamical_shift(params, tol)
        except BracketError as err:
            skipped.append((r, str(err)))
            continue
        rows.append(ShiftScanRow(ratio=r, shift_exact=exact, shift_approx=approx))
    return rows, skipped
