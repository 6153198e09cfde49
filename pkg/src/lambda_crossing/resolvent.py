"""Level-shift-operator treatment of the delta1 ~ delta2 crossing.

The coupling to the intermediate level is summed exactly into an
energy-dependent 2x2 Hamiltonian on the (|1>, |3>) subspace; its
self-consistent eigenvalues are exact eigenvalues of the full 3x3 system
and are found by fixed-point iteration seeded at E = 0, which reproduces
plain adiabatic elimination on the first step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._minimize import minimize_scalar
from .errors import BracketError, ConvergenceError, PoleError
from .hamiltonian import RamanParams, build_hamiltonian
from .resonance import BRACKET_HI, BRACKET_LO, DEFAULT_TOL, _check_interior

DEFAULT_MAX_ITER = 200


@dataclass(frozen=True)
class ImplicitModel:
    """Level-shift matrix elements and derived quantities at energy E."""

    r11: float
    r33: float
    r13: float
    delta_eff_of_e: float
    offset_c_of_e: float
    energy_e: float


@dataclass(frozen=True)
class LevelIteration:
    """Converged crossing-branch energies and iteration diagnostics."""

    e_minus: float
    e_plus: float
    iterations: tuple
    converged: bool
    char_residuals: tuple


def level_shift(params: RamanParams, e: float) -> ImplicitModel:
    """Closed-form level-shift elements at energy E.

    The single intermediate level makes the shift matrix rank one:
    r13^2 = r11 * r33 identically. Raises PoleError when E approaches the
    bare intermediate energy -delta1.
    """
    denom = e + params.delta1
    if abs(denom) <= 1e-12 * params.delta2:
        raise PoleError("energy E too close to the bare intermediate level -delta1")
    o1sq, o2sq = params.omega1**2, params.omega2**2
    quarter = 4.0 * denom
    return ImplicitModel(
        r11=o1sq / quarter,
        r33=o2sq / quarter,
        r13=params.omega1 * params.omega2 / quarter,
        delta_eff_of_e=0.5 * (params.delta2 - params.delta1 + (o2sq - o1sq) / quarter),
        offset_c_of_e=0.5 * (params.delta2 - params.delta1 + (o2sq + o1sq) / quarter),
        energy_e=e,
    )


def _char_residual(params: RamanParams, e: float) -> float:
    return float(np.linalg.det(build_hamiltonian(params).matrix - e * np.eye(3)))


def _iterate_branch(params: RamanParams, sign: float, tol: float, max_iter: int):
    e = 0.0
    prev_step = None
    for n in range(1, max_iter + 1):
        model = level_shift(params, e)
        target = model.offset_c_of_e + sign * math.hypot(model.delta_eff_of_e, model.r13)
        step = target - e
        if abs(step) <= tol * params.delta2:
            return target, n, True
        # Damp when iterates oscillate without contracting.
        if prev_step is not None and step * prev_step < 0 and abs(step) >= 0.9 * abs(prev_step):
            e = e + 0.5 * step
        else:
            e = target
        prev_step = step
    return e, max_iter, False


def iterate_levels(
    params: RamanParams, tol: float = 1e-12, max_iter: int = DEFAULT_MAX_ITER
) -> LevelIteration:
    """Fixed-point iteration of both crossing-branch energies.

    Each branch iterates E <- C(E) + s * sqrt(delta_eff(E)^2 + r13(E)^2)
    from E = 0. Raises ConvergenceError if either branch fails within
    max_iter. Converged energies are exact eigenvalues of the full 3x3
    Hamiltonian (characteristic residuals are returned for inspection).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    e_minus, n_minus, ok_minus = _iterate_branch(params, -1.0, tol, max_iter)
    e_plus, n_plus, ok_plus = _iterate_branch(params, +1.0, tol, max_iter)
    if not (ok_minus and ok_plus):
        raise ConvergenceError(
            f"fixed-point iteration did not converge within {max_iter} steps "
            f"(minus: {ok_minus}, plus: {ok_plus})"
        )
    return LevelIteration(
        e_minus=e_minus,
        e_plus=e_plus,
        iterations=(n_minus, n_plus),
        converged=True,
        char_residuals=(_char_residual(params, e_minus), _char_residual(params, e_plus)),
    )


def adiabatic_limit(params: RamanParams) -> ImplicitModel:
    """Level-shift elements at E = 0: identical to plain adiabatic elimination."""
    return level_shift(params, 0.0)


def resolvent_structural_resonance(params: RamanParams, tol: float = DEFAULT_TOL) -> float:
    """Structural locus from the iterated branch splitting E_plus - E_minus."""
    if params.omega1 * params.omega2 <= 0:
        raise BracketError("structural resonance requires omega1 * omega2 > 0")
    d2 = params.delta2

    def splitting(d1: float) -> float:
        levels = iterate_levels(params.with_delta1(d1))
        return levels.e_plus - levels.e_minus

    x, _ = minimize_scalar(splitting, BRACKET_LO * d2, BRACKET_HI * d2, xtol=tol * d2)
    return _check_interior(x, params, "structural (resolvent)")
