"""Brute-force ground truth in the literal 2^N tensor space.

Everything here is deliberately naive: dense matrices, explicit
permutation sums, explicit Dicke superpositions.  The point is to be
obviously correct, not fast; the hard cap is N <= 10 (dimension 1024)
and the permutation sum is the bottleneck.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np
import scipy.linalg

from .core import NORM_TOL, Star, StarSet, SymmetricState, normalize

MAX_QUBITS = 10

_Q_PLUS_1 = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)  # |1><0|
_K_1 = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)  # |1><1|


@dataclass(frozen=True, eq=False)
class FullState:
    """Dense vector over the 2^N basis |n_1 n_2 ... n_N>, n_1 most significant."""

    n_qubits: int
    vector: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vector, dtype=complex).copy()
        if v.shape != (2**self.n_qubits,):
            raise ValueError("vector length is not 2^N")
        if abs(np.linalg.norm(v) - 1.0) > NORM_TOL:
            raise ValueError("full state is not normalized")
        v.flags.writeable = False
        object.__setattr__(self, "vector", v)


@dataclass(frozen=True, eq=False)
class CollectiveOperators:
    """Collective raising/lowering/number operators on the full tensor space."""

    n_qubits: int
    q_plus: np.ndarray
    q_minus: np.ndarray
    k_op: np.ndarray


def _check_n(n: int, limit: int = MAX_QUBITS):
    if not 1 <= n <= limit:
        raise ValueError(f"N={n} outside supported range 1..{limit}")


def build_dicke(n: int, k: int) -> FullState:
    """Equal superposition of all C(N,k) weight-k bit strings.

    Each string carries amplitude sqrt(k!(N-k)!/N!).
    """
    _check_n(n)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    v = np.zeros(2**n, dtype=complex)
    amp = 1.0 / math.sqrt(math.comb(n, k))
    for ones in itertools.combinations(range(n), k):
        idx = sum(1 << (n - 1 - i) for i in ones)
        v[idx] = amp
    return FullState(n, v)


def single_site(n: int, i: int, op: np.ndarray) -> np.ndarray:
    """Embed a 2x2 operator at site i (0-based, leftmost qubit first)."""
    mats = [np.eye(2, dtype=complex)] * n
    mats[i] = op
    return reduce(np.kron, mats)


def build_collective(n: int) -> CollectiveOperators:
    """q+ = sum_i q_i^+, q- its adjoint, K = sum_i |1><1|_i."""
    _check_n(n)
    q_plus = sum(single_site(n, i, _Q_PLUS_1) for i in range(n))
    k_op = sum(single_site(n, i, _K_1) for i in range(n))
    return CollectiveOperators(n, q_plus, q_plus.conj().T, k_op)


def qubit_vector(star: Star) -> np.ndarray:
    return star.as_vector()


def symmetrized_product(stars: StarSet) -> tuple[FullState, float]:
    """Sum over all N! permutations of |z_1> x ... x |z_N>, normalized.

    Returns (state, pre_norm_sq) where pre_norm_sq is the squared norm
    of the raw permutation sum, which equals N! perm(Gram matrix).
    """
    n = stars.n_qubits
    _check_n(n)
    factors = [qubit_vector(s) for s in stars.stars]
    total = np.zeros(2**n, dtype=complex)
    for perm in itertools.permutations(range(n)):
        total += reduce(np.kron, [factors[i] for i in perm])
    pre_norm_sq = float(np.vdot(total, total).real)
    return FullState(n, total / math.sqrt(pre_norm_sq)), pre_norm_sq


def displaced_ground(n: int, xi: complex) -> FullState:
    """exp(xi q+ - conj(xi) q-) |N;0>.

    The generator is anti-Hermitian, so the exponential is unitary and
    the output norm doubles as a sanity check.
    """
    _check_n(n, limit=8)
    ops = build_collective(n)
    gen = xi * ops.q_plus - np.conj(xi) * ops.q_minus
    u = scipy.linalg.expm(gen)
    v = u @ build_dicke(n, 0).vector
    return FullState(n, v / np.linalg.norm(v))


def dicke_matrix(n: int) -> np.ndarray:
    """2^N x (N+1) matrix whose columns are the Dicke vectors."""
    return np.column_stack([build_dicke(n, k).vector for k in range(n + 1)])


def embed(state: SymmetricState) -> FullState:
    """Sum_k c_k |N;k> in the full tensor space."""
    return FullState(state.n_qubits, dicke_matrix(state.n_qubits) @ state.amplitudes)


def project(full: FullState) -> tuple[SymmetricState, float]:
    """Dicke coordinates of a full vector plus the out-of-subspace residual."""
    d = dicke_matrix(full.n_qubits)
    c = d.conj().T @ full.vector
    residual = float(np.linalg.norm(full.vector - d @ c))
    return normalize(c), residual


def _restrict(m: np.ndarray, d: np.ndarray) -> np.ndarray:
    return d.conj().T @ m @ d


def check_algebra(n: int) -> list[dict]:
    """Verify the collective-operator matrix identities; never raises.

    Returns one record per identity with the max-entry residual.
    Commutator and number-operator identities are checked both on the
    full 2^N space and restricted to the symmetric (Dicke) subspace
    where the statement is made there.
    """
    _check_n(n, limit=8)
    ops = build_collective(n)
    qp, qm, k_op = ops.q_plus, ops.q_minus, ops.k_op
    dim = 2**n
    eye = np.eye(dim, dtype=complex)
    d = dicke_matrix(n)
    k_diag = np.diag(np.arange(n + 1).astype(complex))
    eye_s = np.eye(n + 1, dtype=complex)

    def comm(a, b):
        return a @ b - b @ a

    checks = []

    def record(name, residual, tol=1e-10):
        residual = float(residual)
        checks.append({"name": name, "passed": residual <= tol, "max_residual": residual})

    c_mp = comm(qm, qp)
    record("commutator_symmetric", np.max(np.abs(_restrict(c_mp, d) - (n * eye_s - 2 * k_diag))))
    record("commutator_full", np.max(np.abs(c_mp - (n * eye - 2 * k_op))))
    record("number_raising", np.max(np.abs(comm(k_op, qp) - qp)))
    record("number_lowering", np.max(np.abs(comm(k_op, qm) + qm)))
    record("nilpotency_raising", np.max(np.abs(np.linalg.matrix_power(qp, n + 1))))
    record("nilpotency_lowering", np.max(np.abs(np.linalg.matrix_power(qm, n + 1))))
    record(
        "trilinear_lowering",
        np.max(np.abs(_restrict(comm(qm, comm(qp, qm)) - 2 * qm, d))),
    )
    record(
        "trilinear_raising",
        np.max(np.abs(_restrict(comm(qp, comm(qp, qm)) + 2 * qp, d))),
    )
    ap, am = qp / math.sqrt(n), qm / math.sqrt(n)
    kappa = -1.0 / n
    record(
        "weyl_heisenberg_kappa",
        np.max(np.abs(_restrict(comm(am, ap), d) - (eye_s + 2 * kappa * k_diag))),
    )

    # su(2) dictionary: J+ = q-, J- = q+, Jz = N/2 - K acting on Dicke vectors
    res = 0.0
    for k in range(n + 1):
        dk = d[:, k]
        expect_plus = math.sqrt(k * (n - k + 1)) * d[:, k - 1] if k > 0 else 0.0
        expect_minus = math.sqrt((n - k) * (k + 1)) * d[:, k + 1] if k < n else 0.0
        res = max(res, float(np.max(np.abs(qm @ dk - expect_plus))))
        res = max(res, float(np.max(np.abs(qp @ dk - expect_minus))))
        res = max(res, float(np.max(np.abs((n / 2 * eye - k_op) @ dk - (n / 2 - k) * dk))))
    record("su2_dictionary", res)
    return checks


def check_ladder(n: int) -> list[dict]:
    """Ladder actions on Dicke states via F(N, l) = l (N - l + 1), shift 1/2."""
    _check_n(n, limit=8)
    ops = build_collective(n)
    d = dicke_matrix(n)
    s = 0.5

    def f_factor(ell: float) -> float:
        return ell * (n - ell + 1)

    checks = []
    res_up = res_down = res_k = res_rep = 0.0
    for k in range(n + 1):
        dk = d[:, k]
        up = math.sqrt(f_factor(k + s + 0.5)) * d[:, k + 1] if k < n else 0.0
        down = math.sqrt(f_factor(k + s - 0.5)) * d[:, k - 1] if k > 0 else 0.0
        res_up = max(res_up, float(np.max(np.abs(ops.q_plus @ dk - up))))
        res_down = max(res_down, float(np.max(np.abs(ops.q_minus @ dk - down))))
        res_k = max(res_k, float(np.max(np.abs(ops.k_op @ dk - k * dk))))
        # repeated raising from the ground state
        coeff = math.sqrt(math.factorial(k) * math.factorial(n) / math.factorial(n - k))
        res_rep = max(
            res_rep,
            float(np.max(np.abs(np.linalg.matrix_power(ops.q_plus, k) @ d[:, 0] - coeff * dk))),
        )
    for name, res in [
        ("ladder_raising", res_up),
        ("ladder_lowering", res_down),
        ("ladder_number", res_k),
        ("repeated_raising", res_rep),
    ]:
        checks.append({"name": name, "passed": res <= 1e-10, "max_residual": res})
    return checks


def check_dicke_recursion(n: int) -> list[dict]:
    """|N;k> = sqrt((N-k)/N)|N-1;k>|0> + sqrt(k/N)|N-1;k-1>|1>, all k."""
    if not 2 <= n <= MAX_QUBITS:
        raise ValueError(f"N={n} outside supported range 2..{MAX_QUBITS}")
    e0 = np.array([1.0, 0.0], dtype=complex)
    e1 = np.array([0.0, 1.0], dtype=complex)
    checks = []
    for k in range(n + 1):
        rhs = np.zeros(2**n, dtype=complex)
        if k < n:
            rhs += math.sqrt((n - k) / n) * np.kron(build_dicke(n - 1, k).vector, e0)
        if k > 0:
            rhs += math.sqrt(k / n) * np.kron(build_dicke(n - 1, k - 1).vector, e1)
        res = float(np.max(np.abs(build_dicke(n, k).vector - rhs)))
        checks.append(
            {"name": f"dicke_recursion_k{k}", "passed": res <= 1e-12, "max_residual": res}
        )
    return checks
