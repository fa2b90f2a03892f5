"""Wrapped Gaussian sums and Jacobi theta kernels on odd cyclic lattices.

The central object is the wrapped Gaussian

    g_kappa(n) = sum_alpha exp(-kappa*pi*(alpha*d + n)**2 / d),

together with its half-period-shifted companion

    g_kappa_plus(n) = sum_alpha exp(-kappa*pi*((alpha + 1/2)*d + n)**2 / d).

Both are even in n and strictly positive.  All alpha-sums are truncated
to a symmetric window chosen so that the first excluded term, at the
worst lattice point, falls below term_tol times the partial sum at n=0,
and are accumulated from the largest |alpha| inward so that results are
bit-for-bit even in n.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidParameterError, NumericalFailureError
from .lattice import Dimension, as_dimension

_WINDOW_CAP = 100_000


class ThetaKind(enum.Enum):
    """The three even Jacobi theta series used by this package."""

    THETA2 = "theta2"
    THETA3 = "theta3"
    THETA4 = "theta4"


@dataclass(frozen=True)
class FiniteGaussian:
    """A wrapped Gaussian sampled on the centered lattice -s..s.

    values[i] holds the value at n = i - s.  value(n) accepts any
    integer (or integer array) and reduces it into the lattice first.
    """

    dim: Dimension
    kappa: float
    shifted: bool
    values: np.ndarray
    term_tol: float

    def __post_init__(self):
        self.values.setflags(write=False)

    def value(self, n):
        return self.values[self.dim.offset(n)]

    def squared_norm(self) -> float:
        return float(np.dot(self.values, self.values))


def _check_kappa(kappa: float) -> float:
    kappa = float(kappa)
    if not math.isfinite(kappa) or kappa <= 0.0:
        raise InvalidParameterError(f"kappa must be finite and positive, got {kappa}")
    return kappa


def _check_tol(term_tol: float) -> float:
    term_tol = float(term_tol)
    if not (0.0 < term_tol < 1.0):
        raise InvalidParameterError(f"term_tol must lie in (0, 1), got {term_tol}")
    return term_tol


def _gauss_halfwidth(d: int, kappa: float, term_tol: float, shifted: bool) -> int:
    """Smallest window halfwidth A meeting the truncation rule.

    Unshifted windows cover alpha in [-A, A]; shifted windows cover the
    offset pairs (a, -a-1) for a in [0, A].  The first excluded term is
    evaluated at the worst lattice point |n| = s.
    """
    s = (d - 1) // 2
    c = kappa * math.pi / d
    half = 0.5 if shifted else 0.0
    # partial sum at n=0 over the current window
    partial = 2.0 * math.exp(-c * (half * d) ** 2) if shifted else 1.0
    a = 0
    while True:
        edge = (a + 1 + half) * d - s
        excluded = math.exp(-c * edge * edge)
        # an underflowed term can never contribute, whatever the partial sum
        if excluded == 0.0 or excluded < term_tol * partial:
            return a
        a += 1
        if a > _WINDOW_CAP:
            raise NumericalFailureError("wrapped sum window did not converge")
        partial += 2.0 * math.exp(-c * ((a + half) * d) ** 2)


def _wrapped_values(dim: Dimension, kappa: float, term_tol: float, shifted: bool) -> np.ndarray:
    d = dim.d
    ns = dim.indices().astype(float)
    c = kappa * math.pi / d
    halfwidth = _gauss_halfwidth(d, kappa, term_tol, shifted)
    acc = np.zeros(d)
    if shifted:
        # pairs (a, -a-1) give offsets +-(a+1/2)d
        for a in range(halfwidth, -1, -1):
            x = (a + 0.5) * d + ns
            y = -(a + 0.5) * d + ns
            acc += np.exp(-c * x * x) + np.exp(-c * y * y)
    else:
        for a in range(halfwidth, 0, -1):
            x = a * d + ns
            y = -a * d + ns
            acc += np.exp(-c * x * x) + np.exp(-c * y * y)
        acc += np.exp(-c * ns * ns)
    return acc


def finite_gaussian(dim, kappa: float, term_tol: float = 1e-18) -> FiniteGaussian:
    """Wrapped Gaussian g_kappa on the lattice of size dim.

    kappa > 0 is the squeezing parameter: large kappa narrows the state
    in position, small kappa narrows its Fourier transform.
    """
    dim = as_dimension(dim)
    kappa = _check_kappa(kappa)
    term_tol = _check_tol(term_tol)
    values = _wrapped_values(dim, kappa, term_tol, shifted=False)
    return FiniteGaussian(dim, kappa, False, values, term_tol)


def shifted_finite_gaussian(dim, kappa: float, term_tol: float = 1e-18) -> FiniteGaussian:
    """Half-period-shifted wrapped Gaussian g_kappa_plus.

    Peaks at the lattice edges |n| = s instead of at n = 0.
    """
    dim = as_dimension(dim)
    kappa = _check_kappa(kappa)
    term_tol = _check_tol(term_tol)
    values = _wrapped_values(dim, kappa, term_tol, shifted=True)
    return FiniteGaussian(dim, kappa, True, values, term_tol)


def _theta_halfwidth(t: float, term_tol: float, half: float) -> int:
    partial = 2.0 * math.exp(-math.pi * t * half * half) if half else 1.0
    a = 0
    while True:
        edge = a + 1 + half
        excluded = math.exp(-math.pi * t * edge * edge)
        if excluded == 0.0 or excluded < term_tol * partial:
            return a
        a += 1
        if a > _WINDOW_CAP:
            raise NumericalFailureError("theta series window did not converge")
        partial += 2.0 * math.exp(-math.pi * t * (a + half) ** 2)


def theta(kind: ThetaKind, z: float, t: float, term_tol: float = 1e-18) -> float:
    """Jacobi theta series theta_k(z, i*t) for purely imaginary modulus.

    Only the even real cosine form is computed:

        theta2 = sum_a exp(-pi*t*(a+1/2)**2) * cos(2*pi*(a+1/2)*z)
        theta3 = sum_a exp(-pi*t*a**2)       * cos(2*pi*a*z)
        theta4 = sum_a (-1)**a exp(-pi*t*a**2) * cos(2*pi*a*z)

    t must be positive.  Terms are paired (a, -a) so each contribution
    is real; no complex arithmetic occurs.
    """
    kind = ThetaKind(kind)
    z = float(z)
    t = float(t)
    if not math.isfinite(z):
        raise InvalidParameterError(f"z must be finite, got {z}")
    if not math.isfinite(t) or t <= 0.0:
        raise InvalidParameterError(f"t must be finite and positive, got {t}")
    term_tol = _check_tol(term_tol)

    if kind is ThetaKind.THETA2:
        halfwidth = _theta_halfwidth(t, term_tol, 0.5)
        acc = 0.0
        for a in range(halfwidth, -1, -1):
            h = a + 0.5
            acc += 2.0 * math.exp(-math.pi * t * h * h) * math.cos(2.0 * math.pi * h * z)
        return acc

    halfwidth = _theta_halfwidth(t, term_tol, 0.0)
    acc = 0.0
    for a in range(halfwidth, 0, -1):
        term = 2.0 * math.exp(-math.pi * t * a * a) * math.cos(2.0 * math.pi * a * z)
        if kind is ThetaKind.THETA4 and a % 2 == 1:
            term = -term
        acc += term
    return acc + 1.0


def naive_gaussian(dim, kappa: float) -> np.ndarray:
    """Single-term Gaussian exp(-kappa*pi*n**2/d) without wrapping.

    Useful as a reference for how much the periodization tails matter;
    it is not even approximately its own Fourier transform at small d.
    """
    dim = as_dimension(dim)
    kappa = _check_kappa(kappa)
    ns = dim.indices().astype(float)
    return np.exp(-kappa * math.pi / dim.d * ns * ns)


def periodize(sample: Callable[[float], float], dim, term_tol: float = 1e-18) -> np.ndarray:
    """Wrap a decaying function onto the lattice.

    Returns Phi(n) = sum_alpha sample(sqrt(2*pi/d) * (alpha*d + n)) for
    n = -s..s.  The window grows until the first excluded sample, taken
    at the worst lattice point, is below term_tol times
    max(1, |partial Phi(0)|).  Convergence of the alpha-sum is the
    caller's responsibility; a window cap guards against samples that
    do not decay.
    """
    dim = as_dimension(dim)
    term_tol = _check_tol(term_tol)
    d, s = dim.d, dim.s
    step = math.sqrt(2.0 * math.pi / d)

    phi0 = float(sample(0.0))
    halfwidth = 0
    while True:
        edge = step * ((halfwidth + 1) * d - s)
        if max(abs(float(sample(edge))), abs(float(sample(-edge)))) < term_tol * max(1.0, abs(phi0)):
            break
        halfwidth += 1
        if halfwidth > _WINDOW_CAP:
            raise NumericalFailureError("periodized sum window did not converge")
        phi0 += float(sample(step * halfwidth * d)) + float(sample(-step * halfwidth * d))

    ns = dim.indices().astype(float)
    acc = np.zeros(d)
    for a in range(halfwidth, 0, -1):
        acc += np.array([float(sample(step * (a * d + n))) for n in ns])
        acc += np.array([float(sample(step * (-a * d + n))) for n in ns])
    acc += np.array([float(sample(step * n)) for n in ns])
    return acc


def alternating_wrapped_sum(dim, kappa: float, n, term_tol: float = 1e-18):
    """Sign-alternating wrapped Gaussian sum at a literal integer argument.

        sum_alpha (-1)**alpha * exp(-kappa*pi*(alpha*d + n)**2 / d)

    Anti-periodic under n -> n + d, so n is NOT reduced into the
    lattice; pass the integer you mean.  Terms are paired (a, -a) to
    keep the alternating cancellation stable.  Accepts scalar or array
    n; returns matching shape.
    """
    dim = as_dimension(dim)
    kappa = _check_kappa(kappa)
    term_tol = _check_tol(term_tol)
    d = dim.d
    narr = np.asarray(n)
    if not np.issubdtype(narr.dtype, np.integer):
        raise InvalidParameterError("argument n must be integer-valued")
    c = kappa * math.pi / d

    nmax = int(np.max(np.abs(narr))) if narr.size else 0
    partial = 1.0
    halfwidth = 0
    while True:
        edge = (halfwidth + 1) * d - nmax
        if edge > 0 and math.exp(-c * edge * edge) < term_tol * partial:
            break
        halfwidth += 1
        if halfwidth > _WINDOW_CAP:
            raise NumericalFailureError("alternating sum window did not converge")
        partial += 2.0 * math.exp(-c * (halfwidth * d) ** 2)

    nf = narr.astype(float)
    acc = np.zeros(nf.shape)
    for a in range(halfwidth, 0, -1):
        x = a * d + nf
        y = -a * d + nf
        pair = np.exp(-c * x * x) + np.exp(-c * y * y)
        acc += pair if a % 2 == 0 else -pair
    acc += np.exp(-c * nf * nf)
    if narr.shape == ():
        return float(acc)
    return acc
