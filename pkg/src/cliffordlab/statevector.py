"""Dense complex-matrix oracle for small qudit dimensions.

Every phase convention in the symbolic gate algebra is validated against the
explicit matrices built here: Z|z> = w^z |z>, X|z> = |z+1 mod d>, and the
diagonal quadratic gate D_Phi|z> = w^(z^t Phi z)|z> with w = exp(2*pi*i/d).
The module also simulates the one-qudit gate-teleportation circuit for
semi-Clifford gates G = C1 * D * C2.
"""

from __future__ import annotations

import itertools

import numpy as np

from .gatealg import AlmostDiagClifford, ConjugateTuple, PauliOp, SymMat

ATOL = 1e-10
MAX_DIM = 1024


class DimensionCapError(ValueError):
    pass


class ZeroProbabilityOutcomeError(ValueError):
    pass


def _omega(d: int) -> complex:
    return np.exp(2j * np.pi / d)


def _check_dim(d: int, n: int):
    if d**n > MAX_DIM:
        raise DimensionCapError(f"matrix dimension {d**n} exceeds {MAX_DIM}")


def pauli_matrix(pauli: PauliOp) -> np.ndarray:
    """w^c Z^p X^q as a dense d^n x d^n matrix (tensor over qudits)."""
    d = pauli.modulus.d
    n = pauli.n
    _check_dim(d, n)
    w = _omega(d)
    dim = d**n
    out = np.zeros((dim, dim), dtype=complex)
    for z in itertools.product(range(d), repeat=n):
        src = 0
        for zi in z:
            src = src * d + zi
        tgt_digits = [(zi + qi) % d for zi, qi in zip(z, pauli.q)]
        tgt = 0
        for t in tgt_digits:
            tgt = tgt * d + t
        phase = pauli.c + sum(pi * ti for pi, ti in zip(pauli.p, tgt_digits))
        out[tgt, src] = w ** (phase % d)
    return out


def quad_clifford_matrix(phi: SymMat) -> np.ndarray:
    """Diagonal matrix with phases w^(z^t Phi z)."""
    d = phi.modulus.d
    n = phi.n
    _check_dim(d, n)
    w = _omega(d)
    diag = []
    for z in itertools.product(range(d), repeat=n):
        diag.append(w ** phi.quad_form(z))
    return np.diag(diag)


def almost_diag_matrix(g: AlmostDiagClifford) -> np.ndarray:
    """w^c D_Phi Z^p X^q as a dense matrix."""
    pauli = pauli_matrix(PauliOp(g.c, g.p, g.q, g.modulus))
    return quad_clifford_matrix(g.phi) @ pauli


def is_unitary(m: np.ndarray, atol: float = ATOL) -> bool:
    return np.allclose(m.conj().T @ m, np.eye(m.shape[0]), atol=atol)


def phase_aligned(a: np.ndarray) -> np.ndarray:
    """Divide out the phase of the first entry of largest magnitude, so that
    objects equal up to global phase become entrywise equal."""
    flat = a.ravel()
    idx = int(np.argmax(np.abs(flat)))
    pivot = flat[idx]
    if abs(pivot) < 1e-14:
        return a
    return a * (abs(pivot) / pivot)


def allclose_up_to_phase(a: np.ndarray, b: np.ndarray, atol: float = ATOL) -> bool:
    return np.allclose(phase_aligned(a), phase_aligned(b), atol=atol)


def _proportional_to_identity(m: np.ndarray, atol: float = ATOL) -> bool:
    pivot = m[0, 0]
    if abs(pivot) < atol:
        return False
    return np.allclose(m, pivot * np.eye(m.shape[0]), atol=atol)


def verify_tuple_numerically(t: ConjugateTuple) -> bool:
    """Check the Weyl-pair axioms of a candidate conjugate tuple on matrices.

    Each gate must be unitary of order d up to phase; within each pair
    U V = w V U holds exactly; across pairs the gates commute exactly.
    """
    d = t.modulus.d
    w = _omega(d)
    mats = [almost_diag_matrix(g) for g in t.gates()]
    for m in mats:
        if not is_unitary(m):
            return False
        power = np.linalg.matrix_power(m, d)
        if not _proportional_to_identity(power):
            return False
    u1, v1, u2, v2 = mats
    if not np.allclose(u1 @ v1, w * (v1 @ u1), atol=ATOL):
        return False
    if not np.allclose(u2 @ v2, w * (v2 @ u2), atol=ATOL):
        return False
    for a, b in [(u1, u2), (u1, v2), (v1, u2), (v1, v2)]:
        if not np.allclose(a @ b, b @ a, atol=ATOL):
            return False
    return True


def fourier_matrix(d: int) -> np.ndarray:
    """H[j, k] = w^(jk) / sqrt(d); H|0> is the uniform superposition."""
    if d > 31:
        raise DimensionCapError("fourier_matrix capped at d <= 31")
    w = _omega(d)
    j, k = np.meshgrid(range(d), range(d), indexing="ij")
    return w ** (j * k) / np.sqrt(d)


def csum_matrix(d: int) -> np.ndarray:
    """CSUM|a, b> = |a, b + a mod d> on control (x) target, control first."""
    if d > 31:
        raise DimensionCapError("csum_matrix capped at d <= 31")
    out = np.zeros((d * d, d * d))
    for a in range(d):
        for b in range(d):
            out[a * d + (b + a) % d, a * d + b] = 1.0
    return out


def shift_matrix(d: int) -> np.ndarray:
    """X|z> = |z + 1 mod d>."""
    out = np.zeros((d, d))
    for z in range(d):
        out[(z + 1) % d, z] = 1.0
    return out


def teleport(
    D: np.ndarray,
    C1: np.ndarray,
    C2: np.ndarray,
    psi: np.ndarray,
    outcome: int,
):
    """Gate teleportation of G = C1 D C2 onto psi, post-selecting one outcome.

    Circuit (registers ordered ancilla (x) data):
      ancilla <- D H |0>  (the magic state D|+>);
      data    <- H^2 C2 psi  (H^2 maps |z> to |-z mod d>);
      CSUM with the ancilla as control and the data wire as target;
      measure the data wire, obtaining ``outcome`` = m;
      apply C1 and then the correction (C1 D X^* D^* C1^*)^m to the ancilla.

    Returns (state, probability): the normalized post-measurement ancilla
    state, equal to G psi up to global phase, and the Born probability of the
    outcome (1/d for every outcome in this protocol).
    """
    d = D.shape[0]
    H = fourier_matrix(d)
    ancilla = D @ H @ np.eye(d)[:, 0]
    data = H @ H @ C2 @ psi
    joint = np.kron(ancilla, data)
    joint = csum_matrix(d) @ joint
    # project the data wire onto |outcome>
    post = joint.reshape(d, d)[:, outcome % d]
    prob = float(np.vdot(post, post).real)
    if prob < 1e-12:
        raise ZeroProbabilityOutcomeError(f"outcome {outcome} has probability 0")
    post = post / np.sqrt(prob)
    X = shift_matrix(d)
    correction = C1 @ D @ X.conj().T @ D.conj().T @ C1.conj().T
    state = C1 @ post
    state = np.linalg.matrix_power(correction, outcome % d) @ state
    return state, prob


def random_unitary(d: int, rng) -> np.ndarray:
    """Haar-random unitary via QR of a complex Gaussian matrix."""
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_diagonal_unitary(d: int, rng) -> np.ndarray:
    return np.diag(np.exp(2j * np.pi * rng.random(d)))


def random_state(d: int, rng) -> np.ndarray:
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return v / np.linalg.norm(v)
