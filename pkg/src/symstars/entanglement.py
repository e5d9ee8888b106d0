"""Permanent-based entanglement measure for symmetric multiqubit states.

P_d = perm(A)/N! where A is the Gram matrix of the N Majorana stars;
it equals 1 exactly for separable (coincident-star) states.  The
permanent uses Ryser's inclusion-exclusion formula with Gray-code
subset updates and compensated accumulation; a naive N! sum is kept as
an independent cross-check for small N.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import (
    DimensionMismatchError,
    GramMatrix,
    SizeLimitError,
    Star,
    StarSet,
    SymmetricState,
    UnsupportedDimensionError,
    overlap,
)

PERMANENT_MAX = 24
NAIVE_MAX = 7


def gram(stars: StarSet) -> GramMatrix:
    """Pairwise overlap matrix A[i][j] = <z_i|z_j>."""
    n = stars.n_qubits
    a = np.empty((n, n), dtype=complex)
    for i, si in enumerate(stars.stars):
        for j, sj in enumerate(stars.stars):
            a[i, j] = overlap(si, sj)
    # enforce exact Hermiticity against roundoff in the overlap products
    a = (a + a.conj().T) / 2.0
    np.fill_diagonal(a, 1.0)
    return GramMatrix(n, a)


@njit(cache=True)
def _ryser_gray(a):  # pragma: no cover - exercised through permanent()
    n = a.shape[0]
    row = np.zeros(n, dtype=np.complex128)
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j  # Kahan compensation
    subset = 0
    count = 0
    for k in range(1, 1 << n):
        # Gray code: exactly one column enters or leaves per step
        j = 0
        m = k
        while m & 1 == 0:
            m >>= 1
            j += 1
        bit = 1 << j
        subset ^= bit
        if subset & bit:
            count += 1
            for i in range(n):
                row[i] += a[i, j]
        else:
            count -= 1
            for i in range(n):
                row[i] -= a[i, j]
        term = 1.0 + 0.0j
        for i in range(n):
            term *= row[i]
        if (n - count) & 1:
            term = -term
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def _as_matrix(matrix) -> np.ndarray:
    if isinstance(matrix, GramMatrix):
        return np.asarray(matrix.entries)
    return np.asarray(matrix, dtype=complex)


def permanent(matrix) -> complex:
    """Exact permanent by Ryser/Gray-code, O(2^N N) arithmetic, N <= 24."""
    a = _as_matrix(matrix)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatchError("permanent needs a square matrix")
    if n > PERMANENT_MAX:
        raise SizeLimitError(f"permanent capped at N={PERMANENT_MAX}, got {n}")
    if n == 0:
        return 1.0 + 0.0j
    return complex(_ryser_gray(np.ascontiguousarray(a, dtype=np.complex128)))


def permanent_naive(matrix) -> complex:
    """Direct sum over all N! permutations; cross-check only, N <= 7."""
    a = _as_matrix(matrix)
    n = a.shape[0]
    if n > NAIVE_MAX:
        raise SizeLimitError(f"naive permanent capped at N={NAIVE_MAX}, got {n}")
    rows = np.arange(n)
    return complex(
        sum(np.prod(a[rows, list(perm)]) for perm in itertools.permutations(range(n)))
    )


def bloch_vector(star: Star) -> np.ndarray:
    """Unit Bloch vector of a star; the star at infinity maps to (0,0,-1)."""
    a2 = abs(star.alpha) ** 2
    b2 = abs(star.beta) ** 2
    cross = np.conj(star.alpha) * star.beta
    return np.array([2.0 * cross.real, 2.0 * cross.imag, a2 - b2])


@dataclass(frozen=True, eq=False)
class EntanglementReport:
    """P_d together with the raw permanent and the d=3 extras."""

    p_d: float
    permanent: complex
    concurrence: float | None
    bloch_pair_products: np.ndarray


def concurrence_d3(state: SymmetricState) -> float:
    """Two-qubit concurrence C = |c_1^2 - 2 c_0 c_2|."""
    if state.n_qubits != 2:
        raise DimensionMismatchError("concurrence is defined for d = 3 only")
    c = state.amplitudes
    return float(abs(c[1] ** 2 - 2.0 * c[0] * c[2]))


def perma_concurrence(stars: StarSet) -> EntanglementReport:
    """P_d = perm(Gram)/N!, with the concurrence attached when N = 2."""
    n = stars.n_qubits
    perm = permanent(gram(stars))
    p_d = perm.real / math.factorial(n)
    vecs = [bloch_vector(s) for s in stars.stars]
    pair = np.array([[float(np.dot(u, v)) for v in vecs] for u in vecs])
    concurrence = None
    if n == 2:
        from .majorana import state_from_stars

        concurrence = concurrence_d3(state_from_stars(stars))
    return EntanglementReport(p_d, perm, concurrence, pair)


def closed_form_p(stars: StarSet) -> dict[str, float]:
    """Closed-form P_{N+1} for N = 2, 3, 4 star constellations.

    Returns both published variants: "overlap" in terms of the pairwise
    overlaps and "bloch" in terms of the Bloch-vector dot products.
    """
    n = stars.n_qubits
    s = stars.stars
    if n not in (2, 3, 4):
        raise UnsupportedDimensionError("closed forms cover N in {2, 3, 4}")
    ov = {(i, j): overlap(s[i], s[j]) for i in range(n) for j in range(n)}
    sq = {(i, j): abs(ov[i, j]) ** 2 for i in range(n) for j in range(n)}
    vecs = [bloch_vector(x) for x in s]
    dot = {(i, j): float(np.dot(vecs[i], vecs[j])) for i in range(n) for j in range(n)}
    if n == 2:
        return {
            "overlap": 0.5 * (1.0 + sq[0, 1]),
            "bloch": 0.25 * (3.0 + dot[0, 1]),
        }
    if n == 3:
        triple = ov[0, 1] * ov[1, 2] * ov[2, 0]
        return {
            "overlap": (1.0 + sq[0, 1] + sq[1, 2] + sq[2, 0] + 2.0 * triple.real) / 6.0,
            "bloch": (3.0 + dot[0, 1] + dot[1, 2] + dot[2, 0]) / 6.0,
        }
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    s_sum = sum(sq[p] for p in pairs)
    s_prod = sum(sq[p] * sq[q] for p, q in pairings)
    d_sum = sum(dot[p] for p in pairs)
    d_prod = sum(dot[p] * dot[q] for p, q in pairings)
    return {
        "overlap": (-6.0 + 4.0 * s_sum + 2.0 * s_prod) / 24.0,
        "bloch": (7.5 + 2.5 * d_sum + 0.5 * d_prod) / 24.0,
    }
