"""Kahler potential and Fubini-Study metric of the star manifold.

The potential splits as ln P_d plus a sum of single-star terms
ln(1 + |z_i|^2).  The single-qubit and separable-product metrics are
closed forms; for a general symmetric state the mixed Wirtinger
Hessian of ln P_d is computed by central finite differences.  All of
this lives in the stereographic chart, so stars at infinity must be
rotated away first (rotate_chart).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DegenerateRotationError,
    Star,
    StarAtInfinityError,
    StarSet,
    StarsTooCloseError,
    chordal_distance,
)
from .entanglement import gram, permanent

DEFAULT_STEP = 1e-5


@dataclass(frozen=True, eq=False)
class MetricTensor:
    """g[i][j] = d^2 K / dz_i dconj(z_j) at a star configuration."""

    dim: int
    entries: np.ndarray
    hermiticity_residual: float = 0.0


def _finite_coords(stars: StarSet) -> np.ndarray:
    zs = []
    for s in stars.stars:
        if s.is_infinite:
            raise StarAtInfinityError(
                "stereographic chart excludes infinity; rotate_chart first"
            )
        zs.append(s.z)
    return np.array(zs, dtype=complex)


def _log_perma(zs: np.ndarray) -> float:
    n = zs.size
    constellation = StarSet.from_stars([Star.from_z(z) for z in zs])
    p = permanent(gram(constellation)).real / math.factorial(n)
    return math.log(p)


def kahler_potential(stars: StarSet) -> float:
    """K = ln P_d + sum_i ln(1 + |z_i|^2), all stars finite."""
    zs = _finite_coords(stars)
    return _log_perma(zs) + float(np.sum(np.log1p(np.abs(zs) ** 2)))


def metric_single_qubit(z: complex) -> float:
    """g = 1/(1 + |z|^2)^2, the round metric of the sphere."""
    return 1.0 / (1.0 + abs(z) ** 2) ** 2


def metric_separable(stars: StarSet) -> MetricTensor:
    """Diagonal product metric of CP^1 x ... x CP^1 (unsymmetrized product)."""
    zs = _finite_coords(stars)
    g = np.diag([metric_single_qubit(z) for z in zs]).astype(complex)
    return MetricTensor(stars.n_qubits, g)


def metric_symmetric(stars: StarSet, step: float = DEFAULT_STEP) -> MetricTensor:
    """Full metric: numerical Wirtinger Hessian of ln P_d plus the diagonal term.

    Central differences in the four real directions are combined into
    d^2/dz_i dconj(z_j) = (f_xx + f_yy)/4 + i (f_xy - f_yx)/4.  The
    result is averaged with its conjugate transpose; the raw asymmetry
    is reported as hermiticity_residual.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    zs = _finite_coords(stars)
    n = zs.size
    for i in range(n):
        for j in range(i + 1, n):
            if chordal_distance(Star.from_z(zs[i]), Star.from_z(zs[j])) <= 10.0 * step:
                raise StarsTooCloseError(
                    "finite differences ill-conditioned near coincident stars"
                )

    def f(delta: dict[int, complex]) -> float:
        moved = zs.copy()
        for idx, dz in delta.items():
            moved[idx] += dz
        return _log_perma(moved)

    def second(i: int, di: complex, j: int, dj: complex) -> float:
        if i == j and di == dj:
            return (f({i: di}) - 2.0 * f({}) + f({i: -di})) / abs(di) ** 2
        if i == j:
            # same star, different real directions: move the single coordinate
            return (
                f({i: di + dj}) - f({i: di - dj}) - f({i: -di + dj}) + f({i: -di - dj})
            ) / (4.0 * abs(di) * abs(dj))
        return (
            f({i: di, j: dj}) - f({i: di, j: -dj}) - f({i: -di, j: dj}) + f({i: -di, j: -dj})
        ) / (4.0 * abs(di) * abs(dj))

    h = step
    g = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(i, n):
            fxx = second(i, h, j, h)
            fyy = second(i, 1j * h, j, 1j * h)
            fxy = second(i, h, j, 1j * h)
            fyx = second(i, 1j * h, j, h)
            g[i, j] = 0.25 * (fxx + fyy) + 0.25j * (fxy - fyx)
            if j != i:
                g[j, i] = 0.25 * (fxx + fyy) + 0.25j * (fyx - fxy)
    for i in range(n):
        g[i, i] += metric_single_qubit(zs[i])
    residual = float(np.max(np.abs(g - g.conj().T)))
    g = (g + g.conj().T) / 2.0
    return MetricTensor(n, g, hermiticity_residual=residual)


def rotate_chart(stars: StarSet, target: Star) -> tuple[StarSet, np.ndarray]:
    """SU(2)-rotate the constellation so that `target` lands at z = 0.

    Acting on stars this is a Mobius map; every pairwise overlap is
    preserved exactly, so P_d is unchanged.  Returns the rotated set and
    the 2x2 rotation matrix used.  Raises DegenerateRotationError if a
    star would end up at infinity (i.e. target's antipode is in the set).
    """
    u = np.array(
        [[np.conj(target.alpha), np.conj(target.beta)], [-target.beta, target.alpha]],
        dtype=complex,
    )
    rotated = []
    for s in stars.stars:
        vec = u @ s.as_vector()
        if abs(vec[0]) < 1e-12:
            raise DegenerateRotationError("rotation sends a star to infinity")
        rotated.append(Star(vec[0], vec[1]))
    return StarSet(tuple(rotated), source_degree=stars.source_degree), u


def auto_chart(stars: StarSet, seed: int = 0) -> tuple[StarSet, np.ndarray]:
    """Pick a rotation that keeps every star comfortably finite.

    Tries the identity first, then a spread of candidate targets, and
    keeps the rotation maximizing the smallest |alpha| over the
    constellation.
    """
    rng = np.random.default_rng(seed)
    candidates = [Star.from_z(0.0)]
    candidates += list(stars.stars)
    for _ in range(16):
        v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        candidates.append(Star(v[0], v[1]))
    best = None
    best_score = -1.0
    for target in candidates:
        try:
            rotated, u = rotate_chart(stars, target)
        except DegenerateRotationError:
            continue
        score = min(abs(s.alpha) for s in rotated.stars)
        if score > best_score:
            best, best_score = (rotated, u), score
    if best is None:
        raise DegenerateRotationError("no usable chart rotation found")
    return best
