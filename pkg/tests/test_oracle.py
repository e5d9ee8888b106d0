import itertools
import math

import numpy as np
import pytest

from symstars import Star, StarSet, fidelity, normalize
from symstars import oracle

from helpers import random_star_set, random_state


def index_of(bits):
    return int("".join(str(b) for b in bits), 2)


class TestBuildDicke:
    def test_n2_k1(self):
        v = oracle.build_dicke(2, 1).vector
        expect = np.zeros(4)
        expect[index_of([0, 1])] = expect[index_of([1, 0])] = 1.0 / math.sqrt(2.0)
        np.testing.assert_allclose(v, expect)

    def test_n4_k0_is_all_zeros_string(self):
        v = oracle.build_dicke(4, 0).vector
        expect = np.zeros(16)
        expect[0] = 1.0
        np.testing.assert_allclose(v, expect)

    def test_n4_explicit_list(self):
        # all five weight sectors, equal amplitudes 1/sqrt(C(4,k))
        for k in range(5):
            v = oracle.build_dicke(4, k).vector
            amp = 1.0 / math.sqrt(math.comb(4, k))
            for bits in itertools.product([0, 1], repeat=4):
                expect = amp if sum(bits) == k else 0.0
                np.testing.assert_allclose(v[index_of(list(bits))], expect)

    def test_orthonormal(self):
        d = oracle.dicke_matrix(5)
        np.testing.assert_allclose(d.conj().T @ d, np.eye(6), atol=1e-14)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            oracle.build_dicke(3, 4)
        with pytest.raises(ValueError):
            oracle.build_dicke(11, 0)


class TestCollectiveOperators:
    def test_single_qubit_raising(self):
        ops = oracle.build_collective(1)
        np.testing.assert_allclose(ops.q_plus @ [1.0, 0.0], [0.0, 1.0])
        np.testing.assert_allclose(ops.q_plus @ [0.0, 1.0], [0.0, 0.0])

    def test_raising_annihilates_all_ones(self):
        for n in (2, 3, 4):
            ops = oracle.build_collective(n)
            top = np.zeros(2**n)
            top[-1] = 1.0
            np.testing.assert_allclose(ops.q_plus @ top, 0.0, atol=1e-15)

    def test_ground_state_raising(self):
        ops = oracle.build_collective(2)
        got = ops.q_plus @ oracle.build_dicke(2, 0).vector
        np.testing.assert_allclose(got, math.sqrt(2.0) * oracle.build_dicke(2, 1).vector)

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_algebra_identities(self, n):
        for report in oracle.check_algebra(n):
            assert report["passed"], report

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_ladder_identities(self, n):
        for report in oracle.check_ladder(n):
            assert report["passed"], report

    def test_commutator_spectrum_n2(self):
        # [q-, q+] restricted to the Dicke basis is diag(2, 0, -2)
        ops = oracle.build_collective(2)
        d = oracle.dicke_matrix(2)
        comm = ops.q_minus @ ops.q_plus - ops.q_plus @ ops.q_minus
        np.testing.assert_allclose(
            d.conj().T @ comm @ d, np.diag([2.0, 0.0, -2.0]), atol=1e-12
        )


class TestDickeRecursion:
    @pytest.mark.parametrize("n", [2, 3, 4, 7, 10])
    def test_recursion(self, n):
        for report in oracle.check_dicke_recursion(n):
            assert report["passed"], report

    def test_k0_factorization(self):
        got = oracle.build_dicke(2, 0).vector
        expect = np.kron(oracle.build_dicke(1, 0).vector, [1.0, 0.0])
        np.testing.assert_allclose(got, expect)


class TestSymmetrizedProduct:
    def test_coincident_zero_stars(self):
        full, pre_norm_sq = oracle.symmetrized_product(
            StarSet.from_stars([Star.from_z(0.0)] * 2)
        )
        expect = np.zeros(4)
        expect[0] = 1.0
        np.testing.assert_allclose(full.vector, expect)
        # 2! permutations of identical factors: |2 v|^2 = 4
        np.testing.assert_allclose(pre_norm_sq, 4.0)

    def test_orthogonal_pair(self):
        full, pre_norm_sq = oracle.symmetrized_product(
            StarSet.from_stars([Star.from_z(0.0), Star.infinity()])
        )
        expect = np.zeros(4)
        expect[index_of([0, 1])] = expect[index_of([1, 0])] = 1.0 / math.sqrt(2.0)
        np.testing.assert_allclose(full.vector, expect, atol=1e-15)
        np.testing.assert_allclose(pre_norm_sq, 2.0)

    def test_identical_stars_match_separable_amplitudes(self):
        from symstars import product_state

        z = 0.6 - 0.8j
        full, _ = oracle.symmetrized_product(StarSet.from_stars([Star.from_z(z)] * 3))
        projected, residual = oracle.project(full)
        assert residual <= 1e-12
        assert fidelity(projected, product_state(Star.from_z(z), 3)) >= 1.0 - 1e-12


class TestDisplacedGround:
    def test_zero_displacement(self):
        got = oracle.displaced_ground(3, 0.0).vector
        np.testing.assert_allclose(got, oracle.build_dicke(3, 0).vector, atol=1e-15)

    def test_single_qubit_quarter_turn(self):
        got = oracle.displaced_ground(1, math.pi / 4.0).vector
        np.testing.assert_allclose(got, np.ones(2) / math.sqrt(2.0), atol=1e-12)

    def test_two_qubits_quarter_turn(self):
        got = oracle.displaced_ground(2, math.pi / 4.0)
        target, _ = oracle.symmetrized_product(
            StarSet.from_stars([Star.from_z(1.0)] * 2)
        )
        assert abs(np.vdot(got.vector, target.vector)) >= 1.0 - 1e-12


class TestEmbedProject:
    def test_roundtrip(self, rng):
        state = random_state(rng, 6)
        back, residual = oracle.project(oracle.embed(state))
        assert residual <= 1e-12
        assert fidelity(state, back) >= 1.0 - 1e-12

    def test_symmetrized_product_is_in_symmetric_subspace(self, rng):
        full, _ = oracle.symmetrized_product(random_star_set(rng, 4))
        _, residual = oracle.project(full)
        assert residual <= 1e-10
