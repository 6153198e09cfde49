"""Weak-probe measurement of the dressed-level splitting.

A weak auxiliary field couples |1> and |3> at beat frequency nu. To first
order in the probe, the |eps2> -> |eps3> transition probability shows
sinc^2 peaks at nu ~ +/- (eps3 - eps2); sweeping nu therefore measures the
splitting, and repeating over delta1 locates the structural resonance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._minimize import parabolic_vertex
from .dynamics import evolve  # noqa: F401  (re-exported convenience)
from .errors import BracketError, ExtractionError, GridError
from .hamiltonian import DressedSpectrum, RamanParams, build_hamiltonian, dressed_spectrum
from .resonance import shift_approx

# First-order probabilities above this are outside the perturbative regime.
PERTURBATIVE_CEILING = 0.5

# Feasibility thresholds: probe duration vs. peak-width requirement and
# probe amplitude vs. the perturbative upper bound.
TIME_RATIO_PASS = 10.0
RABI_RATIO_PASS = 0.1


@dataclass(frozen=True)
class ProbeParams:
    """Probe drive: Rabi frequency omega_p, beat frequency nu, duration."""

    omega_p: float
    nu: float
    duration: float

    def __post_init__(self):
        if self.omega_p < 0:
            raise ValueError("omega_p must be non-negative")
        if self.duration <= 0:
            raise ValueError("duration must be positive")


@dataclass(frozen=True)
class AlphaElements:
    """Dressed-bare overlap products entering the probe matrix element."""

    alpha13: float
    alpha31: float


@dataclass(frozen=True)
class Peak:
    position: float
    height: float
    width: float


@dataclass(frozen=True)
class ProbeSpectrum:
    """Transition probability versus nu, with extracted peaks."""

    nu_grid: np.ndarray
    probabilities: np.ndarray
    peaks: tuple
    perturbative_flag: bool


def alpha_elements(spectrum: DressedSpectrum) -> AlphaElements:
    """alpha13 = <eps3|1><3|eps2>, alpha31 = <eps3|3><1|eps2> from the
    sign-fixed eigenvectors."""
    v = spectrum.states
    return AlphaElements(
        alpha13=float(v[0, 2] * v[2, 1]),
        alpha31=float(v[2, 2] * v[0, 1]),
    )


def _sinc_half(x, t):
    """sin(x t / 2) / x, evaluated through its removable zero at x = 0."""
    return 0.5 * t * np.sinc(np.asarray(x) * t / (2.0 * math.pi))


def _closed_form(alpha: AlphaElements, gap: float, omega_p: float, nu, t: float):
    f_plus = _sinc_half(gap + np.asarray(nu), t)
    f_minus = _sinc_half(gap - np.asarray(nu), t)
    cross = 2.0 * alpha.alpha13 * alpha.alpha31 * f_plus * f_minus * np.cos(np.asarray(nu) * t)
    return omega_p**2 * (alpha.alpha31**2 * f_plus**2 + alpha.alpha13**2 * f_minus**2 + cross)


def probe_transition_probability(params: RamanParams, probe: ProbeParams) -> float:
    """First-order |eps2> -> |eps3> probability after time probe.duration.

    Closed form of the perturbative transition amplitude; the removable
    singularities at nu = +/- gap are evaluated through their finite
    sinc limits.
    """
    spec = dressed_spectrum(params)
    gap = float(spec.energies[2] - spec.energies[1])
    return float(_closed_form(alpha_elements(spec), gap, probe.omega_p, probe.nu, probe.duration))


def probe_time_domain_oracle(params: RamanParams, probe: ProbeParams, steps: int) -> float:
    """Independent check of the closed form: integrate the time-dependent
    Schroedinger equation with the oscillating probe coupling.

    Fixed-step classical 4th-order Runge-Kutta from |eps2>, returning
    |<eps3|psi(t)>|^2. Requires at least 50 steps per period of the fastest
    frequency in the problem.
    """
    spec = dressed_spectrum(params)
    gap = float(spec.energies[2] - spec.energies[1])
    fastest = max(gap, abs(probe.nu), params.omega1, params.omega2, abs(params.delta1))
    if fastest > 0:
        min_steps = int(math.ceil(50.0 * probe.duration * fastest / (2.0 * math.pi)))
        if steps < min_steps:
            raise ValueError(
                f"steps={steps} under-resolves the fastest frequency; need >= {min_steps}"
            )
    h0 = build_hamiltonian(params).matrix.astype(complex)
    omega_p, nu, t_final = probe.omega_p, probe.nu, probe.duration
    dt = t_final / steps

    def deriv(t, psi):
        w = 0.5 * omega_p * np.exp(1j * nu * t)
        h = h0.copy()
        h[2, 0] += w
        h[0, 2] += np.conj(w)
        return -1j * (h @ psi)

    psi = spec.states[:, 1].astype(complex)
    t = 0.0
    for _ in range(steps):
        k1 = deriv(t, psi)
        k2 = deriv(t + 0.5 * dt, psi + 0.5 * dt * k1)
        k3 = deriv(t + 0.5 * dt, psi + 0.5 * dt * k2)
        k4 = deriv(t + dt, psi + dt * k3)
        psi = psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t += dt
    return float(np.abs(spec.states[:, 2] @ psi) ** 2)


def _extract_peaks(nu, p, duration):
    """Local maxima with parabolic sub-grid refinement and FWHM estimate."""
    peaks = []
    logp = np.where(p > 0.0, np.log(np.where(p > 0.0, p, 1.0)), -math.inf)
    for i in range(1, len(nu) - 1):
        if p[i] > p[i - 1] and p[i] >= p[i + 1] and p[i] > 0.0:
            if np.isfinite(logp[i - 1]) and np.isfinite(logp[i + 1]):
                pos = parabolic_vertex(
                    nu[i - 1], logp[i - 1], nu[i], logp[i], nu[i + 1], logp[i + 1]
                )
                pos = min(max(pos, nu[i - 1]), nu[i + 1])
            else:
                pos = nu[i]
            half = 0.5 * p[i]
            lo = i
            while lo > 0 and p[lo] > half:
                lo -= 1
            hi = i
            while hi < len(nu) - 1 and p[hi] > half:
                hi += 1
            width = float(nu[hi] - nu[lo])
            peaks.append(Peak(position=float(pos), height=float(p[i]), width=width))
    return tuple(peaks)


def probe_spectrum(params: RamanParams, omega_p: float, duration: float, nu_grid) -> ProbeSpectrum:
    """Evaluate the probe transition probability over a nu grid and extract peaks.

    The grid must span at least [-1.5 gap, 1.5 gap] with spacing no coarser
    than a tenth of the 2 pi / duration peak width.
    """
    nu = np.asarray(nu_grid, dtype=float)
    if nu.ndim != 1 or nu.size < 5:
        raise GridError("nu_grid must be a 1-D grid with at least 5 points")
    spec = dressed_spectrum(params)
    gap = float(spec.energies[2] - spec.energies[1])
    if nu[0] > -1.5 * gap or nu[-1] < 1.5 * gap:
        raise GridError("nu_grid must span at least [-1.5 gap, 1.5 gap]")
    spacing = float(np.max(np.diff(nu)))
    if spacing > (2.0 * math.pi / duration) / 10.0:
        raise GridError(
            f"nu grid spacing {spacing:g} too coarse to resolve 2 pi / t wide peaks"
        )
    p = _closed_form(alpha_elements(spec), gap, omega_p, nu, duration)
    return ProbeSpectrum(
        nu_grid=nu,
        probabilities=p,
        peaks=_extract_peaks(nu, p, duration),
        perturbative_flag=bool(np.any(p > PERTURBATIVE_CEILING)),
    )


def measured_splitting(spectrum: ProbeSpectrum) -> float:
    """Splitting estimate |nu| of the highest peak at negative nu."""
    negative = [pk for pk in spectrum.peaks if pk.position < 0.0]
    if not negative:
        raise ExtractionError("no probe peak found at negative nu")
    best = max(negative, key=lambda pk: pk.height)
    return abs(best.position)


def measured_splitting_positive(spectrum: ProbeSpectrum) -> float:
    """Diagnostic estimator from the positive-nu peak."""
    positive = [pk for pk in spectrum.peaks if pk.position > 0.0]
    if not positive:
        raise ExtractionError("no probe peak found at positive nu")
    best = max(positive, key=lambda pk: pk.height)
    return abs(best.position)


def default_nu_grid(params: RamanParams, duration: float) -> np.ndarray:
    """Grid spanning +/- 1.6 gap with spacing (2 pi / duration) / 12."""
    energies = dressed_spectrum(params).energies
    gap = float(energies[2] - energies[1])
    span = 1.6 * gap
    spacing = (2.0 * math.pi / duration) / 12.0
    n = max(int(math.ceil(2.0 * span / spacing)) + 1, 5)
    return np.linspace(-span, span, n)


@dataclass(frozen=True)
class ProbedResonance:
    delta1: float
    delta1_grid: np.ndarray
    splittings: np.ndarray


def probed_structural_resonance(
    params: RamanParams, delta1_grid, omega_p: float, duration: float
) -> ProbedResonance:
    """Structural resonance as the probe protocol would measure it.

    For each delta1 on the grid, sweep nu, extract the negative-nu peak
    and record the measured splitting; the resonance is the parabolic
    refinement of the grid minimum. The probe prefactor omega_p^2 scales
    the whole spectrum and cannot move the extremum.
    """
    grid = np.asarray(delta1_grid, dtype=float)
    splittings = np.empty(grid.size)
    for i, d1 in enumerate(grid):
        point = params.with_delta1(float(d1))
        spectrum = probe_spectrum(point, omega_p, duration, default_nu_grid(point, duration))
        try:
            splittings[i] = measured_splitting(spectrum)
        except ExtractionError as err:
            raise ExtractionError(f"delta1 = {d1:g}: {err}") from err
    i = int(np.argmin(splittings))
    if i == 0 or i == grid.size - 1:
        raise BracketError("measured-splitting minimum is on the delta1 grid edge")
    d1_star = parabolic_vertex(
        grid[i - 1], splittings[i - 1], grid[i], splittings[i], grid[i + 1], splittings[i + 1]
    )
    return ProbedResonance(delta1=float(d1_star), delta1_grid=grid, splittings=splittings)


@dataclass(frozen=True)
class FeasibilityReport:
    """Resolution and weak-probe checks for a proposed probe setting."""

    time_ratio: float
    rabi_ratio: float
    time_ok: bool
    rabi_ok: bool
    time_required: float
    rabi_bound: float


def feasibility_check(params: RamanParams, omega_p: float, duration: float) -> FeasibilityReport:
    """Compare duration and omega_p against the shift-resolution requirements.

    The peaks narrow like 2 pi / t, so resolving the dynamical shift needs
    duration >> 2 pi / shift; keeping first-order peak heights below unity
    bounds the probe amplitude by twice the shift.
    """
    shift = shift_approx(params)
    time_required = 2.0 * math.pi / shift if shift > 0 else math.inf
    rabi_bound = params.omega1**2 * params.omega2**2 / (2.0 * params.delta2**3)
    time_ratio = duration / time_required if time_required < math.inf else 0.0
    rabi_ratio = omega_p / rabi_bound if rabi_bound > 0 else math.inf
    return FeasibilityReport(
        time_ratio=time_ratio,
        rabi_ratio=rabi_ratio,
        time_ok=time_ratio >= TIME_RATIO_PASS,
        rabi_ok=rabi_ratio <= RABI_RATIO_PASS,
        time_required=time_required,
        rabi_bound=rabi_bound,
    )
