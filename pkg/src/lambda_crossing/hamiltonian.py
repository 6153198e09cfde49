"""Three-level Lambda Hamiltonian and its exact spectral decomposition.

All quantities are angular frequencies with hbar = 1. The two-photon
reference detuning delta2 sets the natural scale; working with delta2 = 1
is the recommended dimensionless convention.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True)
class RamanParams:
    """Drive parameters of the probeless Lambda system.

    omega1, omega2 are the (real, non-negative) Rabi frequencies coupling
    |1>-|2> and |2>-|3|; delta1 is the detuning of the first field and
    delta2 the two-photon reference detuning (> 0).
    """

    omega1: float
    omega2: float
    delta1: float
    delta2: float = 1.0

    def __post_init__(self):
        if self.omega1 < 0 or self.omega2 < 0:
            raise ValueError("Rabi frequencies must be non-negative")
        if self.delta2 <= 0:
            raise ValueError("delta2 must be positive")

    def with_delta1(self, delta1: float) -> "RamanParams":
        return replace(self, delta1=delta1)


@dataclass(frozen=True)
class Hamiltonian3:
    """3x3 real symmetric Hamiltonian matrix in the bare basis (|1>, |2>, |3>)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (3, 3):
            raise ValueError("Hamiltonian must be 3x3")
        object.__setattr__(self, "matrix", m)

    @property
    def is_symmetric(self) -> bool:
        m = self.matrix
        scale = max(np.abs(m).max(), 1e-300)
        return bool(np.abs(m - m.T).max() <= 1e-12 * scale)


@dataclass(frozen=True)
class DressedSpectrum:
    """Sorted eigenvalues and orthonormal eigenvectors of the full Hamiltonian.

    energies are ascending; states[:, k] is the unit eigenvector of
    energies[k] in the bare basis, sign-fixed so that its largest-magnitude
    component is positive.
    """

    energies: np.ndarray
    states: np.ndarray


def build_hamiltonian(params: RamanParams) -> Hamiltonian3:
    """Assemble the Lambda-system Hamiltonian in the laser-adapted picture."""
    o1, o2 = params.omega1, params.omega2
    d1, d2 = params.delta1, params.delta2
    m = np.array(
        [
            [0.0, o1 / 2.0, 0.0],
            [o1 / 2.0, -d1, o2 / 2.0],
            [0.0, o2 / 2.0, -(d1 - d2)],
        ]
    )
    return Hamiltonian3(m)


def bare_levels(params: RamanParams) -> np.ndarray:
    """Uncoupled (drive-off) level energies in bare-basis order: (0, -d1, d2-d1)."""
    return np.array([0.0, -params.delta1, params.delta2 - params.delta1])


def _jacobi_eigh(matrix: np.ndarray):
    """Cyclic Jacobi diagonalization of a symmetric 3x3 matrix.

    Sweeps the fixed pivot order (0,1), (0,2), (1,2) until every
    off-diagonal element is <= 1e-14 * ||H||. Deterministic.
    """
    a = matrix.astype(float).copy()
    v = np.eye(3)
    scale = max(float(np.sqrt((matrix * matrix).sum())), 1e-300)
    for _ in range(60):
        off = max(abs(a[0, 1]), abs(a[0, 2]), abs(a[1, 2]))
        if off <= 1e-14 * scale:
            break
        for p, q in ((0, 1), (0, 2), (1, 2)):
            apq = a[p, q]
            if abs(apq) <= 1e-300:
                continue
            tau = 0.5 * (a[q, q] - a[p, p]) / apq
            if tau >= 0.0:
                t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
            else:
                t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            rot = np.eye(3)
            rot[p, p] = rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            v = v @ rot
            a[p, q] = a[q, p] = 0.0
    return np.diag(a).copy(), v


def diagonalize(h: Hamiltonian3) -> DressedSpectrum:
    """Exact spectral decomposition of a symmetric 3x3 Hamiltonian.

    Energies are returned ascending; eigenvector signs are fixed by making
    the largest-magnitude component positive, so overlaps are reproducible
    across parameter scans.
    """
    if not h.is_symmetric:
        raise ValueError("Hamiltonian matrix is not symmetric")
    energies, vectors = _jacobi_eigh(h.matrix)
    order = np.argsort(energies, kind="stable")
    energies = energies[order]
    vectors = vectors[:, order]
    for k in range(3):
        i = int(np.argmax(np.abs(vectors[:, k])))
        if vectors[i, k] < 0:
            vectors[:, k] = -vectors[:, k]
    return DressedSpectrum(energies=energies, states=vectors)


def dressed_spectrum(params: RamanParams) -> DressedSpectrum:
    """Shorthand for diagonalize(build_hamiltonian(params))."""
    return diagonalize(build_hamiltonian(params))


def gap32(params: RamanParams) -> float:
    """Energy splitting between the two upper dressed levels, eps3 - eps2 >= 0."""
    e = dressed_spectrum(params).energies
    return float(e[2] - e[1])


@dataclass(frozen=True)
class CharacterScan:
    """Dominant-bare-state labels of each dressed level along a delta1 scan.

    labels[i, k] is the bare-state index (0..2) with the largest squared
    overlap with dressed level k at delta1_grid[i]; ambiguous[i, k] marks
    points where the top two overlaps are numerically indistinguishable.
    """

    delta1_grid: np.ndarray
    labels: np.ndarray
    ambiguous: np.ndarray


def track_character(params: RamanParams, delta1_grid, ambig_tol: float = 1e-9) -> CharacterScan:
    """Track which bare state dominates each dressed level across a delta1 scan."""
    grid = np.asarray(delta1_grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise ValueError("delta1_grid must be a 1-D grid with at least 2 points")
    steps = np.diff(grid)
    if not (np.all(steps > 0) or np.all(steps < 0)):
        raise ValueError("delta1_grid must be monotone")
    labels = np.empty((grid.size, 3), dtype=int)
    ambiguous = np.zeros((grid.size, 3), dtype=bool)
    for i, d1 in enumerate(grid):
        spec = dressed_spectrum(params.with_delta1(float(d1)))
        w = spec.states**2
        for k in range(3):
            order = np.argsort(w[:, k])
            labels[i, k] = int(order[-1])
            ambiguous[i, k] = bool(w[order[-1], k] - w[order[-2], k] <= ambig_tol)
    return CharacterScan(delta1_grid=grid, labels=labels, ambiguous=ambiguous)


def character_swap_point(scan: CharacterScan, level: int = 1) -> float:
    """delta1 where the given dressed level swaps its dominant bare state
    between |1> and |3> (midpoint of the bracketing grid step)."""
    lab = scan.labels[:, level]
    for i in range(len(lab) - 1):
        a, b = lab[i], lab[i + 1]
        if {a, b} == {0, 2}:
            return float(0.5 * (scan.delta1_grid[i] + scan.delta1_grid[i + 1]))
    raise ValueError("no |1>/|3> character swap found on the scan")
