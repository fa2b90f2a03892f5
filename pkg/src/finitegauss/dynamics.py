"""Unitary evolution and revival detection from populated spectra.

A revival is an exact recurrence of the evolved state, up to a global
phase in the equidistant case.  detect_revival certifies one from the
populated levels alone, per the two sufficient conditions: rational
level ratios (period 2*m*pi/eps_1) or equally spaced levels (period
2*pi/gap).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CapacityExceededError,
    DimensionMismatchError,
    InvalidParameterError,
    KindMismatchError,
    NoLevelsError,
)
from .hilbert import MatrixKind, OperatorMatrix, StateVector, momentum_operator
from .lattice import as_dimension
from .spectral import Spectrum, hermitian_eig

DEFAULT_WEIGHT_FLOOR = 1e-12


@dataclass(frozen=True)
class RevivalReport:
    """Outcome of revival detection on a populated level set.

    kind is "commensurate", "equidistant", or "none"; period and m are
    None when absent.  level_subset holds the indices (into the input
    vectors) of the levels that entered the analysis.  zero_level
    records that a populated level at zero energy was set aside and
    handled as a constant-phase component.
    """

    kind: str
    period: float | None
    m: int | None
    level_subset: tuple[int, ...]
    tol_used: float
    zero_level: bool = False
    note: str | None = None


@dataclass(frozen=True)
class TimeSeries:
    """Sampled |autocorrelation| values; values[i] pairs with times[i]."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.times.setflags(write=False)
        self.values.setflags(write=False)


def free_hamiltonian(dim) -> OperatorMatrix:
    """H = P**2 / 2; its spectrum is pi*n**2/d over the centered labels."""
    dim = as_dimension(dim)
    p = momentum_operator(dim).entries
    return OperatorMatrix(dim, 0.5 * (p @ p), MatrixKind.HERMITIAN)


def evolve(h: OperatorMatrix, psi: StateVector, t: float, spectrum: Spectrum | None = None) -> StateVector:
    """exp(-1j*t*H) psi via the eigendecomposition of H.

    A precomputed Spectrum of h may be passed to amortize repeated
    evolutions.
    """
    if h.kind is not MatrixKind.HERMITIAN:
        raise KindMismatchError(f"evolution needs a hermitian generator, got {h.kind.value}")
    if psi.dim != h.dim:
        raise DimensionMismatchError("state and generator live on different lattices")
    spec = spectrum if spectrum is not None else hermitian_eig(h)
    coeffs = spec.eigenvectors.conj().T @ psi.amps
    out = spec.eigenvectors @ (np.exp(-1j * float(t) * spec.eigenvalues) * coeffs)
    return StateVector(psi.dim, out)


def autocorrelation(h: OperatorMatrix, psi: StateVector, times) -> TimeSeries:
    """|<psi| exp(-1j*t*H) |psi>| sampled at the given times."""
    if h.kind is not MatrixKind.HERMITIAN:
        raise KindMismatchError(f"evolution needs a hermitian generator, got {h.kind.value}")
    if psi.dim != h.dim:
        raise DimensionMismatchError("state and generator live on different lattices")
    spec = hermitian_eig(h)
    weights = np.abs(spec.eigenvectors.conj().T @ psi.amps) ** 2
    times = np.asarray(times, dtype=float)
    phases = np.exp(-1j * np.outer(times, spec.eigenvalues))
    return TimeSeries(times, np.abs(phases @ weights))


def populated_levels(spectrum: Spectrum, psi: StateVector, weight_floor: float = DEFAULT_WEIGHT_FLOOR):
    """Eigenvalues and squared overlaps of psi with each eigenvector."""
    weights = np.abs(spectrum.eigenvectors.conj().T @ psi.amps) ** 2
    return spectrum.eigenvalues.copy(), weights, weights > weight_floor


def _first_convergent(x: float, rel_tol: float, max_den: int):
    """First continued-fraction convergent p/q of x with q <= max_den and
    |x - p/q| <= rel_tol*|x|, or None."""
    p_prev, q_prev = 1, 0
    p, q = math.floor(x), 1
    rest = x - math.floor(x)
    for _ in range(128):
        if q > max_den:
            return None
        if abs(x - p / q) <= rel_tol * abs(x):
            return p, q
        if rest <= 0.0:
            return None
        inv = 1.0 / rest
        a = math.floor(inv)
        rest = inv - a
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    return None


def _merge_levels(eps: np.ndarray, wts: np.ndarray, tol: float):
    """Cluster sorted levels closer than tol; weights add within a cluster."""
    order = np.argsort(eps)
    eps, wts = eps[order], wts[order]
    reps, reps_w = [eps[0]], [wts[0]]
    for e, w in zip(eps[1:], wts[1:]):
        if e - reps[-1] <= tol:
            reps_w[-1] += w
        else:
            reps.append(e)
            reps_w.append(w)
    return np.array(reps), np.array(reps_w)


def detect_revival(
    levels,
    weights,
    rel_tol: float = 1e-9,
    max_den: int = 10**6,
    weight_floor: float = DEFAULT_WEIGHT_FLOOR,
) -> RevivalReport:
    """Certify a revival period from populated levels, or report none.

    Selection: levels with weight above weight_floor enter; degenerate
    selected levels merge within rel_tol times the level scale; a
    populated zero level is set aside as a constant-phase component and
    flagged.  A single surviving level is a stationary state.  Three or
    more equally spaced levels (gaps agreeing to rel_tol) give the
    equidistant period 2*pi/gap; otherwise every ratio to the smallest
    level must admit a continued-fraction convergent with denominator
    <= max_den and relative error <= rel_tol, giving period
    2*m*pi/eps_1 with m the LCM of the denominators.  A certified pair
    is reported with the tighter pair period 2*pi/gap unless a populated
    zero level forbids the up-to-phase reading.
    """
    levels = np.asarray(levels, dtype=float)
    wts = np.asarray(weights, dtype=float)
    if levels.ndim != 1 or levels.shape != wts.shape:
        raise InvalidParameterError("levels and weights must be matching 1-d vectors")
    if not (np.all(np.isfinite(levels)) and np.all(np.isfinite(wts))):
        raise InvalidParameterError("levels and weights must be finite")
    if np.any(wts < 0.0):
        raise InvalidParameterError("weights must be nonnegative")
    rel_tol = float(rel_tol)
    if rel_tol <= 0.0:
        raise InvalidParameterError(f"rel_tol must be positive, got {rel_tol}")
    max_den = int(max_den)
    if max_den < 1:
        raise InvalidParameterError(f"max_den must be >= 1, got {max_den}")

    selected = np.flatnonzero(wts > weight_floor)
    if selected.size == 0:
        raise NoLevelsError("no level carries weight above the floor")
    subset = tuple(int(i) for i in selected)

    eps = levels[selected]
    scale = float(np.max(np.abs(eps)))
    merge_tol = rel_tol * scale if scale > 0.0 else 0.0
    reps, _ = _merge_levels(eps, wts[selected], merge_tol)

    zero_level = bool(np.any(np.abs(reps) <= merge_tol))
    nonzero = reps[np.abs(reps) > merge_tol]

    if nonzero.size == 0:
        return RevivalReport(
            "equidistant", 1.0, None, subset, rel_tol, True,
            "only a zero level is populated; the state is constant and any time is a period",
        )
    if nonzero.size == 1 and not zero_level:
        return RevivalReport(
            "equidistant", 2.0 * math.pi / abs(float(nonzero[0])), None, subset, rel_tol, False,
            "single populated level; the state is stationary and any time is a period up to phase",
        )

    base = float(nonzero[np.argmin(np.abs(nonzero))])

    if nonzero.size >= 3:
        gaps = np.diff(nonzero)
        mean_gap = float(np.mean(gaps))
        if mean_gap > 0.0 and float(np.max(np.abs(gaps - mean_gap))) <= rel_tol * abs(mean_gap):
            compatible = True
            if zero_level:
                ratio = base / mean_gap
                compatible = abs(ratio - round(ratio)) <= rel_tol * max(1.0, abs(ratio))
            if compatible:
                return RevivalReport(
                    "equidistant", 2.0 * math.pi / mean_gap, None, subset, rel_tol, zero_level
                )

    denominators = [1]
    for e in nonzero:
        x = float(e) / base
        hit = _first_convergent(x, rel_tol, max_den)
        if hit is None:
            return RevivalReport("none", None, None, subset, rel_tol, zero_level)
        denominators.append(hit[1])
    m = math.lcm(*denominators)
    if m > 2**63:
        raise CapacityExceededError(f"denominator LCM {m} exceeds the 2**63 capacity")

    if nonzero.size == 2:
        gap = float(abs(nonzero[1] - nonzero[0]))
        compatible = True
        if zero_level:
            ratio = base / gap
            compatible = abs(ratio - round(ratio)) <= rel_tol * max(1.0, abs(ratio))
        if compatible:
            return RevivalReport(
                "equidistant", 2.0 * math.pi / gap, None, subset, rel_tol, zero_level
            )

    return RevivalReport(
        "commensurate", 2.0 * math.pi * m / abs(base), int(m), subset, rel_tol, zero_level
    )


def certify_period(
    h: OperatorMatrix,
    psi: StateVector,
    period: float,
    start_times=(0.0, 0.7),
    spectrum: Spectrum | None = None,
) -> float:
    """Worst-case entrywise defect of the claimed period under direct evolution.

    For each start time t0, evolves to t0 and t0 + period, fits the
    global phase from the largest component at t0, and measures
    max_n |psi(n, t0+period) - e^{1j*phi} psi(n, t0)|.  Returns the
    maximum over start times.
    """
    spec = spectrum if spectrum is not None else hermitian_eig(h)
    worst = 0.0
    for t0 in start_times:
        before = evolve(h, psi, float(t0), spec).amps
        after = evolve(h, psi, float(t0) + float(period), spec).amps
        anchor = int(np.argmax(np.abs(before)))
        phase = after[anchor] / before[anchor]
        phase = phase / abs(phase)
        worst = max(worst, float(np.max(np.abs(after - phase * before))))
    return worst
