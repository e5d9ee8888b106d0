import numpy as np
import pytest

from symstars import RootFindingError
from symstars.roots import (
    aberth,
    newton_polish,
    polynomial_roots,
    polyval_ascending,
    relative_residual,
)


def poly_from_roots(roots):
    coeffs = np.array([1.0 + 0.0j])
    for r in roots:
        coeffs = np.convolve(coeffs, np.array([-r, 1.0]))
    return coeffs


class TestPolyval:
    def test_horner(self):
        coeffs = np.array([1.0, -2.0, 3.0], dtype=complex)  # 1 - 2x + 3x^2
        np.testing.assert_allclose(
            polyval_ascending(coeffs, np.array([2.0 + 0.0j])), [9.0]
        )

    def test_residual_zero_at_root(self):
        coeffs = poly_from_roots([2.0, -1.0j])
        res = relative_residual(coeffs, np.array([2.0, -1.0j]))
        assert np.all(res <= 1e-15)


class TestAberth:
    def test_known_roots(self):
        truth = np.array([1.0, -2.0, 0.5j, 3.0 - 1.0j])
        roots, converged = aberth(poly_from_roots(truth))
        assert converged
        assert np.max(np.abs(np.sort_complex(roots) - np.sort_complex(truth))) <= 1e-10

    def test_degree_zero(self):
        roots, converged = aberth(np.array([1.0 + 0.0j]))
        assert converged
        assert roots.size == 0

    def test_zero_leading_coefficient_rejected(self):
        with pytest.raises(ValueError):
            aberth(np.array([1.0, 2.0, 0.0], dtype=complex))

    def test_deterministic_under_seed(self):
        coeffs = poly_from_roots([0.3, 1.0 + 2.0j, -0.7j])
        r1, _ = aberth(coeffs, seed=5)
        r2, _ = aberth(coeffs, seed=5)
        np.testing.assert_array_equal(r1, r2)


class TestPolynomialRoots:
    def test_random_polynomials_meet_residual(self, rng):
        for _ in range(50):
            deg = int(rng.integers(1, 12))
            coeffs = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
            roots = polynomial_roots(coeffs)
            assert roots.size == deg
            assert np.all(relative_residual(coeffs, roots) <= 1e-8)

    def test_multiple_root(self):
        # (x - 1)^4: clustered roots still satisfy the relative residual
        coeffs = poly_from_roots([1.0] * 4)
        roots = polynomial_roots(coeffs)
        assert np.max(np.abs(roots - 1.0)) <= 1e-3
        assert np.all(relative_residual(coeffs, roots) <= 1e-8)

    def test_root_at_zero(self):
        coeffs = np.array([0.0, 0.0, 1.0, 1.0], dtype=complex)  # x^2 (1 + x)
        roots = np.sort_complex(polynomial_roots(coeffs))
        np.testing.assert_allclose(roots, [-1.0, 0.0, 0.0], atol=1e-7)

    def test_polish_improves_or_keeps(self, rng):
        coeffs = poly_from_roots([0.2, 1.5, -2.0 + 1.0j])
        rough = np.array([0.21, 1.49, -2.01 + 1.01j])
        polished = newton_polish(coeffs, rough)
        assert np.all(
            relative_residual(coeffs, polished) <= relative_residual(coeffs, rough)
        )

    def test_failure_raises(self):
        # residual tolerance impossible to satisfy at an absurd threshold
        coeffs = poly_from_roots([1.0, 2.0, 3.0]) * (1.0 + 1e-10)
        with pytest.raises(RootFindingError):
            polynomial_roots(coeffs + 1e-3, residual_tol=1e-300)
