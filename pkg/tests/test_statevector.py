import numpy as np
import pytest

from cliffordlab.gatealg import (
    AlmostDiagClifford,
    ConjugateTuple,
    PauliOp,
    SymMat,
)
from cliffordlab.modring import Modulus
from cliffordlab.statevector import (
    DimensionCapError,
    ZeroProbabilityOutcomeError,
    allclose_up_to_phase,
    almost_diag_matrix,
    csum_matrix,
    fourier_matrix,
    is_unitary,
    pauli_matrix,
    quad_clifford_matrix,
    random_diagonal_unitary,
    random_state,
    random_unitary,
    shift_matrix,
    teleport,
    verify_tuple_numerically,
)

MOD3 = Modulus(3)
W3 = np.exp(2j * np.pi / 3)


def test_identity_pauli_is_identity():
    p = PauliOp(0, (0, 0), (0, 0), MOD3)
    assert np.allclose(pauli_matrix(p), np.eye(9))


def test_weyl_commutation_single_qudit():
    Z = pauli_matrix(PauliOp(0, (1,), (0,), MOD3))
    X = pauli_matrix(PauliOp(0, (0,), (1,), MOD3))
    assert np.allclose(Z @ X, W3 * X @ Z, atol=1e-10)
    assert np.allclose(np.linalg.matrix_power(X, 3), np.eye(3), atol=1e-10)
    assert np.allclose(np.linalg.matrix_power(Z, 3), np.eye(3), atol=1e-10)


def test_clock_and_shift_action():
    Z = pauli_matrix(PauliOp(0, (1,), (0,), MOD3))
    X = pauli_matrix(PauliOp(0, (0,), (1,), MOD3))
    e = np.eye(3)
    for z in range(3):
        assert np.allclose(Z @ e[:, z], W3**z * e[:, z])
        assert np.allclose(X @ e[:, z], e[:, (z + 1) % 3])


def test_quad_clifford_phase_table():
    # n=1, Phi=(1): phases w^(z^2) = (1, w, w) at d=3
    D = quad_clifford_matrix(SymMat((1,), MOD3))
    assert np.allclose(np.diag(D), [1, W3, W3], atol=1e-10)


def test_quad_clifford_additive():
    rng = np.random.default_rng(0)
    for _ in range(20):
        p1 = SymMat(tuple(rng.integers(3, size=3)), MOD3)
        p2 = SymMat(tuple(rng.integers(3, size=3)), MOD3)
        assert np.allclose(
            quad_clifford_matrix(p1) @ quad_clifford_matrix(p2),
            quad_clifford_matrix(p1 + p2),
            atol=1e-10,
        )


def test_constructed_matrices_unitary():
    rng = np.random.default_rng(1)
    for _ in range(20):
        g = AlmostDiagClifford(
            int(rng.integers(3)),
            SymMat(tuple(rng.integers(3, size=3)), MOD3),
            tuple(rng.integers(3, size=2)),
            tuple(rng.integers(3, size=2)),
            MOD3,
        )
        assert is_unitary(almost_diag_matrix(g))


def test_dimension_cap():
    mod = Modulus(101)
    with pytest.raises(DimensionCapError):
        pauli_matrix(PauliOp(0, (0, 0), (0, 0), mod))
    with pytest.raises(DimensionCapError):
        fourier_matrix(37)


def test_phase_aligned_comparison():
    a = np.array([1.0, 1j])
    assert allclose_up_to_phase(a, 1j * a)
    assert not allclose_up_to_phase(a, np.array([1.0, -1j]))


def test_verify_tuple_identity_case():
    def gate(p, q):
        return AlmostDiagClifford(0, SymMat((0, 0, 0), MOD3), p, q, MOD3)

    t = ConjugateTuple(
        gate((1, 0), (0, 0)), gate((0, 0), (1, 0)),
        gate((0, 1), (0, 0)), gate((0, 0), (0, 1)),
    )
    assert verify_tuple_numerically(t)
    # squaring v1 breaks the Weyl phase: U1 V1^2 = w^2 V1^2 U1
    broken = ConjugateTuple(t.u1, gate((0, 0), (2, 0)), t.u2, t.v2)
    assert not verify_tuple_numerically(broken)


def test_fourier_properties():
    for d in (3, 5):
        H = fourier_matrix(d)
        assert is_unitary(H)
        plus = np.full(d, 1 / np.sqrt(d))
        assert np.allclose(H @ np.eye(d)[:, 0], plus, atol=1e-10)
        H2 = H @ H
        for z in range(d):
            assert np.allclose(H2 @ np.eye(d)[:, z], np.eye(d)[:, (-z) % d],
                               atol=1e-10)


def test_csum_properties():
    d = 3
    C = csum_matrix(d)
    assert is_unitary(C)
    assert np.allclose(np.linalg.matrix_power(C, d), np.eye(d * d), atol=1e-10)
    for a in range(d):
        for b in range(d):
            src = np.zeros(d * d)
            src[a * d + b] = 1
            out = C @ src
            assert out[a * d + (b + a) % d] == 1


def test_teleport_identity_gate():
    d = 3
    I = np.eye(d)
    psi = I[:, 0]
    state, prob = teleport(I, I, I, psi, 0)
    assert allclose_up_to_phase(state, psi, atol=1e-9)
    assert abs(prob - 1 / d) < 1e-9


@pytest.mark.parametrize("seed", range(10))
def test_teleport_random_instances(seed):
    d = 3
    rng = np.random.default_rng(seed)
    D = random_diagonal_unitary(d, rng)
    C1 = random_unitary(d, rng)
    C2 = random_unitary(d, rng)
    psi = random_state(d, rng)
    target = C1 @ D @ C2 @ psi
    total = 0.0
    for m in range(d):
        state, prob = teleport(D, C1, C2, psi, m)
        assert abs(abs(np.vdot(target, state)) - 1) < 1e-9
        assert abs(prob - 1 / d) < 1e-9
        total += prob
    assert abs(total - 1) < 1e-9


def test_teleport_at_d5():
    d = 5
    rng = np.random.default_rng(3)
    D = random_diagonal_unitary(d, rng)
    C1 = random_unitary(d, rng)
    C2 = random_unitary(d, rng)
    psi = random_state(d, rng)
    target = C1 @ D @ C2 @ psi
    state, prob = teleport(D, C1, C2, psi, 2)
    assert abs(abs(np.vdot(target, state)) - 1) < 1e-9
    assert abs(prob - 1 / d) < 1e-9


def test_shift_matrix_matches_pauli():
    assert np.allclose(shift_matrix(3),
                       pauli_matrix(PauliOp(0, (0,), (1,), MOD3)))
