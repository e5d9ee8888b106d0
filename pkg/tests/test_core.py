import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symstars import (
    AllZeroError,
    DimensionMismatchError,
    GramMatrix,
    Star,
    SymmetricState,
    chordal_distance,
    elementary_symmetric,
    fidelity,
    normalize,
    overlap,
)
from symstars.core import elementary_symmetric_all, sqrt_binomial

from helpers import random_star, random_state


def complex_strategy(max_mag=3.0):
    part = st.floats(-max_mag, max_mag, allow_nan=False)
    return st.builds(complex, part, part)


class TestStar:
    def test_from_z_normalized(self):
        s = Star.from_z(1.0)
        np.testing.assert_allclose(s.alpha, 1.0 / np.sqrt(2.0))
        np.testing.assert_allclose(s.beta, 1.0 / np.sqrt(2.0))

    def test_infinity(self):
        s = Star.infinity()
        assert s.is_infinite
        assert s.alpha == 0
        assert s.beta == 1

    def test_z_roundtrip(self):
        z = 0.7 - 1.3j
        np.testing.assert_allclose(Star.from_z(z).z, z, atol=1e-15)

    def test_z_raises_at_infinity(self):
        from symstars import StarAtInfinityError

        with pytest.raises(StarAtInfinityError):
            Star.infinity().z

    def test_phase_fixed_representatives_compare_equal(self):
        assert Star(1.0, 1.0) == Star(1j, 1j)
        assert Star.from_z(2.0) == Star(-3.0, -6.0)

    def test_zero_vector_rejected(self):
        with pytest.raises(AllZeroError):
            Star(0.0, 0.0)

    def test_antipode_of_zero_is_infinity(self):
        assert Star.from_z(0.0).antipode() == Star.infinity()


class TestOverlap:
    def test_identical(self):
        np.testing.assert_allclose(overlap(Star.from_z(0.3j), Star.from_z(0.3j)), 1.0)

    def test_orthogonal_poles(self):
        assert overlap(Star.from_z(0.0), Star.infinity()) == 0.0

    def test_finite_closed_form(self, rng):
        # (1 + conj(za) zb) / sqrt((1+|za|^2)(1+|zb|^2))
        for _ in range(50):
            za, zb = rng.standard_normal(2) + 1j * rng.standard_normal(2)
            expect = (1.0 + np.conj(za) * zb) / np.sqrt(
                (1.0 + abs(za) ** 2) * (1.0 + abs(zb) ** 2)
            )
            got = overlap(Star.from_z(za), Star.from_z(zb))
            np.testing.assert_allclose(abs(got), abs(expect), atol=1e-12)

    @given(complex_strategy(), complex_strategy(), complex_strategy(), complex_strategy())
    @settings(max_examples=60, deadline=None)
    def test_conjugate_symmetry(self, a1, a2, b1, b2):
        if abs(a1) + abs(a2) == 0 or abs(b1) + abs(b2) == 0:
            return
        a, b = Star(a1, a2), Star(b1, b2)
        np.testing.assert_allclose(overlap(a, b), np.conj(overlap(b, a)), atol=1e-12)
        assert abs(overlap(a, b)) <= 1.0 + 1e-12

    @given(complex_strategy(), complex_strategy())
    @settings(max_examples=60, deadline=None)
    def test_antipode_orthogonal(self, a1, a2):
        if abs(a1) + abs(a2) == 0:
            return
        s = Star(a1, a2)
        # cancellation is exact up to the rounding of the canonical
        # (phase-fixed) representative, i.e. a few ulp
        assert abs(overlap(s, s.antipode())) <= 5e-16

    def test_chordal_distance_tolerance_equivalence(self, rng):
        # dist <= tol exactly when |overlap| >= 1 - tol^2/2
        for _ in range(50):
            a, b = random_star(rng), random_star(rng)
            d = chordal_distance(a, b)
            np.testing.assert_allclose(
                abs(overlap(a, b)), 1.0 - d**2 / 2.0, atol=1e-12
            )


class TestSymmetricState:
    def test_normalize_scaling(self):
        state = normalize([2.0, 0.0, 0.0])
        np.testing.assert_allclose(state.amplitudes, [1.0, 0.0, 0.0])

    def test_normalize_phase_fix(self):
        state = normalize([0.0, 1j, 0.0])
        np.testing.assert_allclose(state.amplitudes, [0.0, 1.0, 0.0])

    def test_normalize_equal_pair(self):
        state = normalize([1.0, 1.0])
        np.testing.assert_allclose(state.amplitudes, np.ones(2) / np.sqrt(2.0))

    def test_all_zero_rejected(self):
        with pytest.raises(AllZeroError):
            normalize(np.zeros(4))

    def test_far_from_unit_norm_rejected(self):
        with pytest.raises(ValueError):
            SymmetricState(2, np.array([2.0, 0.0, 0.0]))

    def test_shape_mismatch_rejected(self):
        with pytest.raises(DimensionMismatchError):
            SymmetricState(2, np.array([1.0, 0.0]))


class TestFidelity:
    def test_self(self, rng):
        state = random_state(rng, 5)
        np.testing.assert_allclose(fidelity(state, state), 1.0)

    def test_orthogonal_dicke(self):
        assert fidelity(normalize([1, 0, 0]), normalize([0, 1, 0])) == 0.0

    def test_direct_inner_product(self):
        a = normalize([1.0, 0.0])
        b = normalize([1.0, 1.0])
        np.testing.assert_allclose(fidelity(a, b), 1.0 / np.sqrt(2.0))

    def test_dimension_mismatch(self, rng):
        with pytest.raises(DimensionMismatchError):
            fidelity(random_state(rng, 3), random_state(rng, 4))

    @given(st.floats(-np.pi, np.pi, allow_nan=False))
    @settings(max_examples=30, deadline=None)
    def test_global_phase_invariance(self, phi):
        c = np.array([0.3, 0.5 - 0.2j, 0.1j, 0.7])
        a = normalize(c)
        b = normalize(np.exp(1j * phi) * c)
        np.testing.assert_allclose(fidelity(a, b), 1.0, atol=1e-12)


class TestElementarySymmetric:
    def test_k0_is_one(self, rng):
        assert elementary_symmetric(0, rng.standard_normal(5)) == 1.0

    def test_repeated_value(self):
        z = 0.4 + 1.1j
        np.testing.assert_allclose(elementary_symmetric(2, [z, z, z]), 3.0 * z**2)

    def test_integer_example(self):
        # pairs of (1,2,3): 1*2 + 1*3 + 2*3
        np.testing.assert_allclose(elementary_symmetric(2, [1.0, 2.0, 3.0]), 11.0)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            elementary_symmetric(4, [1.0, 2.0, 3.0])

    def test_against_subset_enumeration(self, rng):
        import itertools

        values = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        for k in range(7):
            brute = sum(
                np.prod([values[i] for i in sub])
                for sub in itertools.combinations(range(6), k)
            )
            np.testing.assert_allclose(
                elementary_symmetric(k, values), brute, atol=1e-12
            )

    @given(st.lists(complex_strategy(2.0), min_size=1, max_size=6))
    @settings(max_examples=60, deadline=None)
    def test_vieta(self, roots):
        # coefficient of x^(N-k) in prod (x - r_i) is (-1)^k s_k
        poly = np.array([1.0 + 0.0j])
        for r in roots:
            poly = np.convolve(poly, np.array([1.0, -r]))
        e = elementary_symmetric_all(roots)
        n = len(roots)
        for k in range(n + 1):
            np.testing.assert_allclose(
                poly[k], (-1.0) ** k * e[k], atol=1e-9 * max(1.0, abs(e[k]))
            )


class TestGramMatrix:
    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            GramMatrix(2, np.array([[1.0, 1.0], [0.0, 1.0]]))

    def test_rejects_bad_diagonal(self):
        with pytest.raises(ValueError):
            GramMatrix(2, np.array([[2.0, 0.0], [0.0, 1.0]]))

    def test_accepts_valid(self):
        m = GramMatrix(2, np.array([[1.0, 0.5j], [-0.5j, 1.0]]))
        assert m.entries.shape == (2, 2)


def test_sqrt_binomial():
    np.testing.assert_allclose(sqrt_binomial(4, 2), np.sqrt(6.0))
    assert sqrt_binomial(10, 0) == 1.0
