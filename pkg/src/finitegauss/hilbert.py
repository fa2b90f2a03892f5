"""State vectors and the basic operator algebra on C^d, d odd.

Index convention matches the lattice module: basis states are labelled
by centered representatives n = -s..s, stored with n = -s first.  The
Fourier kernel uses the positive sign,

    (F psi)(k) = d**-0.5 * sum_n exp(+2j*pi*k*n/d) * psi(n),

so that position maps to momentum as F Q F^dag = P.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateVectorError,
    DimensionMismatchError,
    InvalidParameterError,
    KindMismatchError,
    PhasePointRangeError,
    UnsupportedOrderError,
)
from .lattice import Dimension, as_dimension
from .wrapped import finite_gaussian, periodize

HERMITIAN_TOL = 1e-13
UNITARY_TOL = 1e-12


class MatrixKind(enum.Enum):
    HERMITIAN = "hermitian"
    UNITARY = "unitary"
    GENERAL = "general"


@dataclass(frozen=True)
class StateVector:
    """A vector in C^d over the centered lattice."""

    dim: Dimension
    amps: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex)
        if amps.shape != (self.dim.d,):
            raise DimensionMismatchError(
                f"amplitude vector has shape {amps.shape}, lattice needs ({self.dim.d},)"
            )
        if not np.all(np.isfinite(amps.view(float))):
            raise InvalidParameterError("amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n < 1e-150:
            raise DegenerateVectorError(f"cannot normalize a vector of norm {n}")
        return StateVector(self.dim, self.amps / n)


@dataclass(frozen=True)
class OperatorMatrix:
    """A d x d matrix tagged with its structural kind.

    Construction verifies the tag: hermitian matrices must equal their
    adjoint to 1e-13 relative in the max norm, unitary matrices must
    satisfy M^dag M = I to 1e-12 in the max norm.
    """

    dim: Dimension
    entries: np.ndarray
    kind: MatrixKind = field(default=MatrixKind.GENERAL)

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        d = self.dim.d
        if entries.shape != (d, d):
            raise DimensionMismatchError(
                f"matrix has shape {entries.shape}, lattice needs ({d}, {d})"
            )
        if not np.all(np.isfinite(entries.view(float))):
            raise InvalidParameterError("matrix entries must be finite")
        kind = MatrixKind(self.kind)
        if kind is MatrixKind.HERMITIAN:
            scale = np.max(np.abs(entries))
            if scale > 0.0:
                dev = np.max(np.abs(entries - entries.conj().T))
                if dev > HERMITIAN_TOL * scale:
                    raise KindMismatchError(
                        f"matrix tagged hermitian deviates from its adjoint by {dev:.3e}"
                    )
        elif kind is MatrixKind.UNITARY:
            dev = np.max(np.abs(entries.conj().T @ entries - np.eye(d)))
            if dev > UNITARY_TOL:
                raise KindMismatchError(
                    f"matrix tagged unitary fails M^dag M = I by {dev:.3e}"
                )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "kind", kind)

    def apply(self, state: StateVector) -> StateVector:
        if state.dim != self.dim:
            raise DimensionMismatchError("operator and state live on different lattices")
        return StateVector(self.dim, self.entries @ state.amps)


@dataclass(frozen=True)
class PhasePoint:
    """A point (alpha, beta) of the d x d discrete phase space."""

    alpha: int
    beta: int

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
                raise InvalidParameterError(f"{name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))

    def check_range(self, dim: Dimension) -> None:
        s = dim.s
        if abs(self.alpha) > s or abs(self.beta) > s:
            raise PhasePointRangeError(
                f"phase point ({self.alpha}, {self.beta}) outside centered range |.| <= {s}"
            )


def _root_table(dim: Dimension) -> np.ndarray:
    """exp(2j*pi*r/d) for r = 0..d-1; exponents are reduced mod d first."""
    return np.exp(2j * np.pi * np.arange(dim.d) / dim.d)


def _fourier_entries(dim: Dimension, sign: int) -> np.ndarray:
    n = dim.indices()
    w = _root_table(dim)
    prods = np.mod(sign * np.outer(n, n), dim.d)
    return w[prods] / math.sqrt(dim.d)


def fourier_matrix(dim) -> OperatorMatrix:
    """The unitary finite Fourier transform on the centered lattice."""
    dim = as_dimension(dim)
    return OperatorMatrix(dim, _fourier_entries(dim, +1), MatrixKind.UNITARY)


def fourier_apply(state: StateVector, inverse: bool = False) -> StateVector:
    """Apply the finite Fourier transform (or its inverse) to a state."""
    kernel = _fourier_entries(state.dim, -1 if inverse else +1)
    return StateVector(state.dim, kernel @ state.amps)


def position_operator(dim) -> OperatorMatrix:
    """Q = sqrt(2*pi/d) * diag(n) over the centered labels."""
    dim = as_dimension(dim)
    q = math.sqrt(2.0 * math.pi / dim.d) * dim.indices().astype(float)
    return OperatorMatrix(dim, np.diag(q).astype(complex), MatrixKind.HERMITIAN)


def momentum_operator(dim) -> OperatorMatrix:
    """P = F Q F^dag in closed form.

    Entries are purely imaginary: p[j,l] = -(i/2) * sqrt(2*pi/d)
    * (-1)**(j-l) / sin(pi*(j-l)/d) off the diagonal, zero on it.
    """
    dim = as_dimension(dim)
    d = dim.d
    n = dim.indices()
    u = n[:, None] - n[None, :]
    signs = np.where(u % 2 == 0, 1.0, -1.0)
    denom = np.sin(np.pi * u / d)
    np.fill_diagonal(denom, 1.0)
    entries = -0.5j * math.sqrt(2.0 * math.pi / d) * signs / denom
    np.fill_diagonal(entries, 0.0)
    return OperatorMatrix(dim, entries, MatrixKind.HERMITIAN)


def displacement(dim, point: PhasePoint) -> OperatorMatrix:
    """Phase-space displacement D(alpha, beta).

    D = exp(1j*pi*alpha*beta/d) * A**alpha * B**beta where A is the
    cyclic shift and B the modulation; acting on components,

        (D psi)(j) = exp(-1j*pi*alpha*beta/d)
                     * exp(2j*pi*beta*j/d) * psi(j - alpha).
    """
    dim = as_dimension(dim)
    point.check_range(dim)
    d, s = dim.d, dim.s
    a, b = point.alpha, point.beta
    w = _root_table(dim)
    n = dim.indices()
    phases = np.exp(-1j * np.pi * a * b / d) * w[np.mod(b * n, d)]
    entries = np.zeros((d, d), dtype=complex)
    rows = np.arange(d)
    cols = np.mod(rows - a, d)
    entries[rows, cols] = phases
    return OperatorMatrix(dim, entries, MatrixKind.UNITARY)


def _coherent_amps(dim: Dimension, point: PhasePoint, base: np.ndarray) -> np.ndarray:
    d = dim.d
    a, b = point.alpha, point.beta
    w = _root_table(dim)
    n = dim.indices()
    return (
        np.exp(-1j * np.pi * a * b / d)
        * w[np.mod(b * n, d)]
        * base[np.mod(np.arange(d) - a, d)]
    )


def coherent_state(dim, point: PhasePoint, term_tol: float = 1e-18) -> StateVector:
    """Displaced normalized wrapped Gaussian with kappa = 1.

    The modulus is the kappa=1 wrapped Gaussian recentered at alpha;
    the phase is linear in the lattice label with frequency beta.
    """
    dim = as_dimension(dim)
    point.check_range(dim)
    g = finite_gaussian(dim, 1.0, term_tol)
    base = g.values / math.sqrt(g.squared_norm())
    return StateVector(dim, _coherent_amps(dim, point, base))


def frame_resolution_residual(dim, term_tol: float = 1e-18) -> float:
    """Max-norm deviation of (1/d) sum over all d**2 coherent projectors from I.

    Zero (to rounding) because the coherent family forms a tight frame.
    """
    dim = as_dimension(dim)
    d, s = dim.d, dim.s
    g = finite_gaussian(dim, 1.0, term_tol)
    base = g.values / math.sqrt(g.squared_norm())
    acc = np.zeros((d, d), dtype=complex)
    for alpha in range(-s, s + 1):
        for beta in range(-s, s + 1):
            v = _coherent_amps(dim, PhasePoint(alpha, beta), base)
            acc += np.outer(v, v.conj())
    acc /= d
    return float(np.max(np.abs(acc - np.eye(d))))


def _hermite(k: int, x: float) -> float:
    # physicists' convention: H0=1, H1=2x, H_{k+1} = 2x H_k - 2k H_{k-1}
    hk, hk1 = 1.0, 0.0
    for j in range(k):
        hk, hk1 = 2.0 * x * hk - 2.0 * j * hk1, hk
    return hk


def mehta_eigenvector(dim, k: int, term_tol: float = 1e-18) -> StateVector:
    """Unnormalized k-th discrete Hermite-Gaussian, a Fourier eigenvector.

    Built by periodizing exp(-x**2/2) * H_k(x); satisfies
    F f_k = i**k f_k exactly in exact arithmetic.  Supported for
    k = 0..6; higher orders are refused, and a lattice too small to
    carry the requested order raises DegenerateVectorError.
    """
    dim = as_dimension(dim)
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise InvalidParameterError(f"order k must be an integer, got {k!r}")
    if k < 0 or k > 6:
        raise UnsupportedOrderError(f"order k = {k} outside the supported range 0..6")
    values = periodize(lambda x: math.exp(-0.5 * x * x) * _hermite(k, x), dim, term_tol)
    if float(np.linalg.norm(values)) < 1e-10:
        raise DegenerateVectorError(
            f"order-{k} vector on a lattice of size {dim.d} is numerically null"
        )
    return StateVector(dim, values.astype(complex))
