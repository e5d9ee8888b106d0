"""Dictionary between Dicke amplitudes and Majorana star constellations.

A symmetric state with amplitudes (c_0..c_N) defines the analytic
polynomial P(w) = sum_k sqrt(C(N,k)) c_k w^k of degree k_max (the last
nonzero amplitude).  Its zeros w_i map to stars via z_i = -1/w_i, a zero
at w = 0 becoming the star at infinity; the remaining N - k_max stars
sit at z = 0.  The inverse direction goes through the homogeneous
elementary symmetric polynomials of the star coordinates.
"""

from __future__ import annotations

import math

import numpy as np

from .core import (
    Star,
    StarSet,
    SymmetricState,
    chordal_distance,
    normalize,
    sqrt_binomial,
)
from .roots import polynomial_roots, relative_residual

AMP_EPS = 1e-12  # amplitudes below this count as structural zeros
CLUSTER_TOL = 1e-6  # chordal radius within which roots always merge
LINK_TOL = 0.25  # widest radius at which a multiple-root merge is attempted
VALID_TOL = 1e-8  # derivative residual certifying a genuine multiple root
DEFAULT_ROOT_TOL = 1e-8
MAX_DIM = 21  # root conditioning beyond N = 20 is out of scope


def bargmann_coefficients(state: SymmetricState) -> np.ndarray:
    """Coefficients d_k = sqrt(C(N,k)) c_k of the analytic polynomial."""
    n = state.n_qubits
    return np.array(
        [sqrt_binomial(n, k) * state.amplitudes[k] for k in range(n + 1)]
    )


def bargmann_eval(state: SymmetricState, z: complex) -> complex:
    """psi(z) = (1 + |z|^2)^(-N/2) sum_k sqrt(C(N,k)) c_k z^k."""
    d = bargmann_coefficients(state)
    poly = sum(dk * z**k for k, dk in enumerate(d))
    return poly / (1.0 + abs(z) ** 2) ** (state.n_qubits / 2.0)


def _cluster_groups(stars: list[Star], tol: float = CLUSTER_TOL) -> list[list[int]]:
    """Indices of stars grouped by chordal distance <= tol (union-find)."""
    n = len(stars)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if chordal_distance(stars[i], stars[j]) <= tol:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _poly_derivative(coeffs: np.ndarray, order: int) -> np.ndarray:
    for _ in range(order):
        coeffs = coeffs[1:] * np.arange(1, coeffs.size)
    return coeffs


def _newton_refine(coeffs: np.ndarray, x0: complex) -> complex:
    """Polish a simple root of the given (ascending) polynomial."""
    x = x0
    deriv = _poly_derivative(coeffs, 1)
    for _ in range(50):
        p = complex(np.polyval(coeffs[::-1], x))
        dp = complex(np.polyval(deriv[::-1], x))
        if dp == 0:
            return x0
        step = p / dp
        x -= step
        if abs(step) <= 1e-15 * (1.0 + abs(x)):
            return x
    return x if abs(x - x0) < 10.0 * CLUSTER_TOL else x0


def _cluster_centroid(members: list[Star]) -> Star:
    """Chart mean of a tight cluster.

    Averaging Bloch vectors would bias the centroid by the squared
    cluster radius; averaging the stereographic coordinate (or its
    reciprocal, near infinity) keeps the elementary symmetric
    polynomials of the constellation accurate to roundoff.
    """
    if abs(members[0].alpha) >= 0.5:  # cluster well inside the finite chart
        return Star.from_z(np.mean([s.beta / s.alpha for s in members]))
    omega = np.mean([-s.alpha / s.beta for s in members])
    return Star(omega, -1.0)


def _refined_centroid(
    members: list[Star], z_poly: np.ndarray
) -> tuple[Star, np.ndarray, complex]:
    """Newton-sharpened centroid of a candidate multiple root.

    An m-fold zero of p is a simple zero of p^(m-1), so Newton on the
    derivative collapses the eps^(1/m) scatter of the individual roots
    to roundoff.  Returns (star, chart polynomial, chart coordinate)
    so the caller can certify the multiplicity.
    """
    m = len(members)
    finite_chart = abs(members[0].alpha) >= 0.5
    if finite_chart:
        x = complex(np.mean([s.beta / s.alpha for s in members]))
        poly = z_poly
    else:
        # near infinity work in the reciprocal chart w = -1/z
        x = complex(np.mean([-s.alpha / s.beta for s in members]))
        poly = z_poly[::-1] * (-1.0) ** np.arange(z_poly.size)
    if m > 1:
        x = _newton_refine(_poly_derivative(poly, m - 1), x)
    star = Star.from_z(x) if finite_chart else Star(x, -1.0)
    return star, poly, x


def _is_multiple_root(poly: np.ndarray, x: complex, m: int) -> bool:
    """Certify x as an m-fold zero: p, p', .., p^(m-1) all vanish there."""
    for order in range(m):
        c = _poly_derivative(poly, order)
        if not np.any(c):
            continue
        if relative_residual(c, np.array([x]))[0] > VALID_TOL:
            return False
    return True


def _cluster_stars(stars: list[Star], z_poly: np.ndarray) -> list[Star]:
    """Merge root clusters that certify as multiple zeros.

    Roots of an m-fold zero scatter by roughly eps^(1/m), far beyond
    any fixed merge radius, so candidate groups are linked generously
    and accepted only when the refined centroid annihilates the first
    m-1 derivatives; rejected groups are re-linked at tighter radii,
    down to the unconditional floor CLUSTER_TOL.
    """
    out = list(stars)

    def handle(indices: list[int], tau: float):
        local = [stars[i] for i in indices]
        for g in _cluster_groups(local, tau):
            idxs = [indices[k] for k in g]
            if len(idxs) == 1:
                continue
            members = [stars[i] for i in idxs]
            star, poly, x = _refined_centroid(members, z_poly)
            if _is_multiple_root(poly, x, len(idxs)):
                for i in idxs:
                    out[i] = star
            elif tau <= CLUSTER_TOL:
                centroid = _cluster_centroid(members)
                for i in idxs:
                    out[i] = centroid
            else:
                handle(idxs, max(tau / 8.0, CLUSTER_TOL))

    handle(list(range(len(stars))), LINK_TOL)
    return out


def stars_from_state(
    state: SymmetricState, tol: float = DEFAULT_ROOT_TOL, seed: int = 0
) -> StarSet:
    """The N Majorana stars of a symmetric state.

    tol bounds the relative polynomial residual of every extracted
    zero; the random initializer of the root finder is seeded for
    reproducibility.  Raises RootFindingError if the residual cannot
    be met.
    """
    n = state.n_qubits
    if state.dim > MAX_DIM:
        raise ValueError(f"star dictionary supports d <= {MAX_DIM}")
    d = bargmann_coefficients(state)
    k_max = max(
        (k for k in range(n + 1) if abs(state.amplitudes[k]) > AMP_EPS), default=0
    )
    omegas = polynomial_roots(d[: k_max + 1], residual_tol=tol, seed=seed)
    stars = [Star(w, -1.0) for w in omegas]  # (w, -1) ~ (1, -1/w); w=0 -> infinity
    stars += [Star.from_z(0.0)] * (n - k_max)
    # same polynomial in the z chart, for sharpening multiple-root clusters
    trunc = d.copy()
    trunc[k_max + 1 :] = 0.0
    z_poly = trunc[::-1] * (-1.0) ** np.arange(n, -1, -1)
    return StarSet(tuple(_cluster_stars(stars, z_poly)), source_degree=k_max)


def state_from_stars(stars: StarSet) -> SymmetricState:
    """Reconstruct the amplitudes from a constellation.

    c_k is proportional to sqrt(k!(N-k)!/N!) times the homogeneous
    elementary symmetric polynomial of the star coordinates (which
    reduces to the textbook s_k when every star is finite); the output
    is normalized and phase-fixed, so compare by fidelity.
    """
    n = stars.n_qubits
    poly = np.array([1.0 + 0.0j])
    for s in stars.stars:
        poly = np.convolve(poly, np.array([s.alpha, s.beta]))
    c = np.array([poly[k] / sqrt_binomial(n, k) for k in range(n + 1)])
    return normalize(c)


def product_state(star: Star, n: int) -> SymmetricState:
    """The completely separable state |z>^(x N) in Dicke coordinates."""
    return state_from_stars(StarSet.from_stars([star] * n))


def is_separable(
    state: SymmetricState, tol: float = CLUSTER_TOL, seed: int = 0
) -> tuple[bool, Star | None]:
    """Whether all Majorana stars coincide within chordal distance tol.

    Returns (flag, witness); the witness is the common star for a
    separable state and None otherwise.
    """
    constellation = stars_from_state(state, seed=seed)
    stars = list(constellation.stars)
    worst = max(
        (
            chordal_distance(stars[i], stars[j])
            for i in range(len(stars))
            for j in range(i + 1, len(stars))
        ),
        default=0.0,
    )
    if worst > tol:
        return False, None
    return True, _cluster_centroid(stars)
