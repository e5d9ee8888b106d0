"""Domain types and shared numerics for symmetric multiqubit states.

A symmetric state of N qubits lives in the (N+1)-dimensional subspace
spanned by the Dicke basis; it is stored as the amplitude vector
(c_0, ..., c_N).  Single-qubit directions ("stars") are kept in
homogeneous coordinates (alpha, beta) so that the point at infinity on
the Riemann sphere needs no special casing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-12
RENORM_TOL = 1e-6


class AllZeroError(ValueError):
    """Raised when an amplitude vector has no nonzero entry."""


class DimensionMismatchError(ValueError):
    """Raised when two states of different qubit number are combined."""


class RootFindingError(RuntimeError):
    """Raised when polynomial root extraction fails to meet tolerance."""


class SizeLimitError(ValueError):
    """Raised when a request exceeds a documented hard size cap."""


class UnsupportedDimensionError(ValueError):
    """Raised when a closed form is requested outside its valid range."""


class StarAtInfinityError(ValueError):
    """Raised by stereographic-chart operations given a star at infinity."""


class StarsTooCloseError(ValueError):
    """Raised when finite differencing would straddle coincident stars."""


class DegenerateRotationError(ValueError):
    """Raised when a chart rotation would send a star to infinity."""


def _phase_fix(vec: np.ndarray, atol: float = 0.0) -> np.ndarray:
    """Multiply by a global phase so the first nonzero entry is real > 0."""
    for v in vec:
        if abs(v) > atol:
            return vec * (abs(v) / v)
    raise AllZeroError("all components vanish")


@dataclass(frozen=True)
class Star:
    """One point of a Majorana constellation, in homogeneous coordinates.

    (alpha, beta) is the qubit alpha|0> + beta|1>; a finite star z has
    (alpha, beta) proportional to (1, z) and the star at infinity is
    (0, 1).  The representative is normalized and phase-fixed so equal
    directions compare equal.
    """

    alpha: complex
    beta: complex

    def __post_init__(self):
        a, b = complex(self.alpha), complex(self.beta)
        n = math.hypot(abs(a), abs(b))
        if n == 0.0:
            raise AllZeroError("star has zero homogeneous vector")
        a, b = a / n, b / n
        lead = a if a != 0 else b
        phase = abs(lead) / lead
        object.__setattr__(self, "alpha", a * phase)
        object.__setattr__(self, "beta", b * phase)

    @classmethod
    def from_z(cls, z: complex) -> "Star":
        return cls(1.0, complex(z))

    @classmethod
    def infinity(cls) -> "Star":
        return cls(0.0, 1.0)

    @property
    def is_infinite(self) -> bool:
        return self.alpha == 0

    @property
    def z(self) -> complex:
        """Stereographic coordinate beta/alpha; raises for the infinite star."""
        if self.is_infinite:
            raise StarAtInfinityError("star at infinity has no finite z")
        return self.beta / self.alpha

    def antipode(self) -> "Star":
        """The diametrically opposite point, z -> -1/conj(z)."""
        return Star(np.conj(self.beta), -np.conj(self.alpha))

    def as_vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=complex)


def overlap(a: Star, b: Star) -> complex:
    """Coherent-state overlap <a|b> = conj(alpha_a) alpha_b + conj(beta_a) beta_b."""
    return np.conj(a.alpha) * b.alpha + np.conj(a.beta) * b.beta


def chordal_distance(a: Star, b: Star) -> float:
    """Distance on the sphere, zero iff the stars coincide.

    Defined as sqrt(2 (1 - |<a|b>|)), so two stars are within distance
    tol exactly when |<a|b>| >= 1 - tol^2/2.
    """
    return math.sqrt(max(0.0, 2.0 * (1.0 - abs(overlap(a, b)))))


@dataclass(frozen=True, eq=False)
class StarSet:
    """Multiset of N stars equivalent to a symmetric state up to phase.

    source_degree records the degree of the underlying Majorana
    polynomial (the number of finite Bargmann zeros); the remaining
    N - source_degree stars sit at z = 0 by convention.
    """

    stars: tuple[Star, ...]
    source_degree: int

    def __post_init__(self):
        object.__setattr__(self, "stars", tuple(self.stars))
        if not self.stars:
            raise ValueError("a star set needs at least one star")
        if not 0 <= self.source_degree <= len(self.stars):
            raise ValueError("source_degree out of range")

    @classmethod
    def from_stars(cls, stars) -> "StarSet":
        stars = tuple(stars)
        return cls(stars, source_degree=len(stars))

    @property
    def n_qubits(self) -> int:
        return len(self.stars)

    def multiplicities(self) -> list[tuple[Star, int]]:
        """Distinct stars with their multiplicities, preserving first-seen order."""
        out: list[tuple[Star, int]] = []
        for s in self.stars:
            for i, (t, m) in enumerate(out):
                if t == s:
                    out[i] = (t, m + 1)
                    break
            else:
                out.append((s, 1))
        return out


@dataclass(frozen=True, eq=False)
class SymmetricState:
    """Amplitudes (c_0..c_N) over the Dicke basis of dimension d = N + 1.

    Construction renormalizes silently when the norm is within 1e-6 of
    unity and rejects otherwise; the global phase is fixed so the first
    nonzero amplitude is real positive.
    """

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        n = int(self.n_qubits)
        c = np.asarray(self.amplitudes, dtype=complex).copy()
        if n < 1:
            raise ValueError("need at least one qubit")
        if c.shape != (n + 1,):
            raise DimensionMismatchError(
                f"expected {n + 1} amplitudes, got shape {c.shape}"
            )
        norm = float(np.linalg.norm(c))
        if norm == 0.0:
            raise AllZeroError("all amplitudes are zero")
        if abs(norm - 1.0) > RENORM_TOL:
            raise ValueError(f"amplitude vector norm {norm} too far from 1")
        c = c / norm
        c = _phase_fix(c, atol=1e-12 * float(np.max(np.abs(c))))
        c.flags.writeable = False
        object.__setattr__(self, "n_qubits", n)
        object.__setattr__(self, "amplitudes", c)

    @property
    def dim(self) -> int:
        return self.n_qubits + 1


def normalize(amplitudes) -> SymmetricState:
    """Build a SymmetricState from an arbitrary nonzero amplitude vector."""
    c = np.asarray(amplitudes, dtype=complex)
    norm = float(np.linalg.norm(c))
    if norm == 0.0:
        raise AllZeroError("all amplitudes are zero")
    return SymmetricState(c.size - 1, c / norm)


def fidelity(a: SymmetricState, b: SymmetricState) -> float:
    """|<a|b>| over Dicke amplitudes; phase-insensitive, in [0, 1]."""
    if a.n_qubits != b.n_qubits:
        raise DimensionMismatchError(
            f"states have {a.n_qubits} and {b.n_qubits} qubits"
        )
    return min(1.0, abs(np.vdot(a.amplitudes, b.amplitudes)))


def elementary_symmetric_all(values) -> np.ndarray:
    """All elementary symmetric polynomials s_0..s_N of the given values.

    Uses the O(N^2) incremental (Newton triangle) recurrence; subset
    enumeration would be exponential and ill-conditioned.
    """
    values = np.asarray(values, dtype=complex)
    e = np.zeros(values.size + 1, dtype=complex)
    e[0] = 1.0
    for m, v in enumerate(values, start=1):
        e[1 : m + 1] = e[1 : m + 1] + v * e[0:m]
    return e


def elementary_symmetric(k: int, values) -> complex:
    """s_k of the values; s_0 = 1."""
    values = np.asarray(values, dtype=complex)
    if not 0 <= k <= values.size:
        raise IndexError(f"k={k} outside 0..{values.size}")
    return complex(elementary_symmetric_all(values)[k])


def sqrt_binomial(n: int, k: int) -> float:
    """sqrt(n choose k), exact integer binomial under the root."""
    return math.sqrt(math.comb(n, k))


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """N x N Hermitian matrix of pairwise star overlaps, unit diagonal."""

    dim: int
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=complex).copy()
        if a.shape != (self.dim, self.dim):
            raise DimensionMismatchError("Gram matrix shape mismatch")
        if np.max(np.abs(a - a.conj().T)) > NORM_TOL:
            raise ValueError("Gram matrix is not Hermitian")
        if np.max(np.abs(np.diag(a) - 1.0)) > NORM_TOL:
            raise ValueError("Gram matrix diagonal is not 1")
        a.flags.writeable = False
        object.__setattr__(self, "entries", a)
