"""Polynomial root extraction for the Majorana/Bargmann dictionary.

Primary path: Aberth-Ehrlich simultaneous iteration started on a circle
sized from the coefficient magnitudes, followed by Newton polishing.
Fallback: companion-matrix eigenvalues (numpy.roots) when Aberth does
not converge.  Coefficients are in ascending order, p(x) = sum c_k x^k,
with a nonzero leading coefficient.
"""

from __future__ import annotations

import numpy as np

from .core import RootFindingError

ABERTH_MAX_ITER = 200


def polyval_ascending(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Horner evaluation of p at the points x."""
    acc = np.zeros_like(x) + coeffs[-1]
    for c in coeffs[-2::-1]:
        acc = acc * x + c
    return acc


def relative_residual(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    """|p(x)| scaled by sum_k |c_k| |x|^k, a conditioning-aware residual."""
    scale = polyval_ascending(np.abs(coeffs).astype(complex), np.abs(x).astype(complex))
    return np.abs(polyval_ascending(coeffs, x)) / np.maximum(np.abs(scale), 1e-300)


def _initial_guesses(coeffs: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    n = coeffs.size - 1
    lead = abs(coeffs[-1])
    # Fujiwara bound on the root moduli
    fujiwara = 2.0 * max(
        (abs(coeffs[n - k]) / lead) ** (1.0 / k) for k in range(1, n + 1)
    )
    radius = max(fujiwara / 2.0, 1e-3)
    angles = 2.0 * np.pi * (np.arange(n) + 0.35) / n
    jitter = 0.05 * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
    return radius * np.exp(1j * angles) * (1.0 + jitter)


def aberth(coeffs, max_iter: int = ABERTH_MAX_ITER, seed: int = 0):
    """All roots by Aberth-Ehrlich iteration; returns (roots, converged)."""
    coeffs = np.asarray(coeffs, dtype=complex)
    n = coeffs.size - 1
    if n <= 0:
        return np.zeros(0, dtype=complex), True
    if coeffs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    deriv = coeffs[1:] * np.arange(1, n + 1)
    rng = np.random.default_rng(seed)
    x = _initial_guesses(coeffs, rng)
    tol = 4.0 * np.finfo(float).eps
    converged = False
    abs_coeffs = np.abs(coeffs).astype(complex)
    for _ in range(max_iter):
        p = polyval_ascending(coeffs, x)
        scale = np.abs(polyval_ascending(abs_coeffs, np.abs(x).astype(complex)))
        if np.all(np.abs(p) <= 1e-15 * np.maximum(scale, 1e-300)):
            converged = True
            break
        dp = polyval_ascending(deriv, x)
        dp = np.where(dp == 0, 1e-300, dp)
        w = p / dp
        diff = x[:, None] - x[None, :]
        np.fill_diagonal(diff, 1.0)
        inv_sum = np.sum(1.0 / diff, axis=1) - 1.0  # remove the diagonal 1/1 term
        denom = 1.0 - w * inv_sum
        denom = np.where(denom == 0, 1e-300, denom)
        step = w / denom
        x = x - step
        if np.all(np.abs(step) <= tol * (1.0 + np.abs(x))):
            converged = True
            break
    return x, converged


def newton_polish(coeffs: np.ndarray, x: np.ndarray, iters: int = 3) -> np.ndarray:
    """A few Newton steps per root; keeps a step only if it helps the residual."""
    n = coeffs.size - 1
    deriv = coeffs[1:] * np.arange(1, n + 1)
    for _ in range(iters):
        p = polyval_ascending(coeffs, x)
        dp = polyval_ascending(deriv, x)
        dp = np.where(dp == 0, 1e-300, dp)
        cand = x - p / dp
        better = relative_residual(coeffs, cand) <= relative_residual(coeffs, x)
        x = np.where(better, cand, x)
    return x


def polynomial_roots(coeffs, residual_tol: float = 1e-8, seed: int = 0) -> np.ndarray:
    """All roots of an ascending-coefficient polynomial, residual-checked.

    Raises RootFindingError if neither Aberth nor the companion-matrix
    fallback brings every relative residual below residual_tol.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    if coeffs.size - 1 <= 0:
        return np.zeros(0, dtype=complex)
    roots, converged = aberth(coeffs, seed=seed)
    roots = newton_polish(coeffs, roots)
    if converged and np.all(relative_residual(coeffs, roots) <= residual_tol):
        return roots
    # companion-matrix fallback (numpy expects descending coefficients)
    roots = np.roots(coeffs[::-1])
    roots = newton_polish(coeffs, roots, iters=5)
    res = relative_residual(coeffs, roots)
    if not np.all(res <= residual_tol):
        raise RootFindingError(
            f"root residual {float(np.max(res)):.3e} above tolerance {residual_tol:.1e}"
        )
    return roots
