"""Adiabatic elimination of the intermediate level |2>.

Reduces the Lambda system to an effective two-level model in the
(|1>, |3>) subspace, valid when delta1 ~ delta2 >> omega1, omega2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularEliminationError
from .hamiltonian import RamanParams

# Heuristic coupling/detuning ratio beyond which the reduction is dubious.
VALIDITY_RATIO = 0.5


@dataclass(frozen=True)
class EffectiveModel:
    """Effective two-level model: coupling, detuning, energy offset, mixing angle.

    theta in (0, pi) satisfies tan(theta) = -omega_eff / delta_eff and is
    pi/2 exactly at delta_eff = 0. offset_c is zero for the plain
    (symmetrized) elimination; the resolvent construction supplies an
    energy-dependent offset instead.
    """

    omega_eff: float
    delta_eff: float
    offset_c: float
    theta: float
    validity_warning: bool = False


def mixing_angle(omega_eff: float, delta_eff: float) -> float:
    """Branch-fixed mixing angle in (0, pi); pi/2 iff delta_eff = 0."""
    return math.atan2(omega_eff, -delta_eff)


def eliminate(params: RamanParams) -> EffectiveModel:
    """Adiabatically eliminate |2> and return the effective two-level model.

    Raises SingularEliminationError at delta1 = 0 (the reduction divides
    by delta1). Sets validity_warning (warn-only) when the couplings are
    not small against the detunings.
    """
    o1, o2 = params.omega1, params.omega2
    d1, d2 = params.delta1, params.delta2
    if d1 == 0.0:
        raise SingularEliminationError("adiabatic elimination is singular at delta1 = 0")
    omega_eff = o1 * o2 / (4.0 * d1)
    delta_eff = 0.5 * (d2 - d1) + (o2 * o2 - o1 * o1) / (8.0 * d1)
    warn = max(o1, o2) / min(abs(d1), d2) > VALIDITY_RATIO
    return EffectiveModel(
        omega_eff=omega_eff,
        delta_eff=delta_eff,
        offset_c=0.0,
        theta=mixing_angle(omega_eff, delta_eff),
        validity_warning=warn,
    )


def effective_energies(model: EffectiveModel):
    """Eigenenergies (eps_minus, eps_plus) = -/+ sqrt(delta_eff^2 + omega_eff^2)."""
    eps = math.hypot(model.delta_eff, model.omega_eff)
    return -eps, eps


def effective_states(model: EffectiveModel):
    """Orthonormal eigenvectors of the symmetrized two-level Hamiltonian.

    Returned in the (|1>, |3>) basis as (state_minus, state_plus) with
    |eps_plus> = (sin(theta/2), cos(theta/2)) and
    |eps_minus> = (cos(theta/2), -sin(theta/2)).
    """
    half = 0.5 * model.theta
    plus = np.array([math.sin(half), math.cos(half)])
    minus = np.array([math.cos(half), -math.sin(half)])
    return minus, plus


def effective_matrix(model: EffectiveModel) -> np.ndarray:
    """Symmetrized 2x2 matrix [[delta_eff, omega_eff], [omega_eff, -delta_eff]].

    The diagonal sign follows the mixing-angle convention above: with
    theta = atan2(omega_eff, -delta_eff), the +eps eigenvector is
    (sin(theta/2), cos(theta/2)), which tends to the second basis state
    as theta -> 0 (delta_eff < 0 dominant).
    """
    return np.array(
        [
            [model.delta_eff, model.omega_eff],
            [model.omega_eff, -model.delta_eff],
        ]
    )
