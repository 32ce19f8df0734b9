"""Symbolic algebra of Pauli and almost-diagonal Clifford gates.

An almost-diagonal Clifford gate is w^c * D_Phi * Z^p * X^q where D_Phi is the
diagonal gate with phases w^(z^t Phi z) for a symmetric matrix Phi over Z_d.
This normal form (diagonal part leftmost, Z before X) is kept throughout, and
all phase exponents live in Z_d and are tracked exactly.

The closed form for conjugating a Pauli by D_Phi used here is

    D_Phi (w^c Z^p X^q) D_Phi^* = w^(c - q^t Phi q) Z^(p + 2 Phi q) X^q,

validated against the dense-matrix oracle in the statevector module (the sign
of the phase correction is fixed by the oracle, not by convention).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .modring import MixedModulusError, Modulus
from .symplectic import (
    DimensionMismatchError,
    FpMatrix,
    SympVec,
    complete_symplectic_basis,
    extend_to_semibasis,
    rank_and_kernel,
)


class InvalidTupleError(ValueError):
    pass


@dataclass(frozen=True)
class PauliOp:
    """w^c Z^p X^q with c in Z_d and p, q in Z_d^n."""

    c: int
    p: tuple
    q: tuple
    modulus: Modulus

    def __post_init__(self):
        d = self.modulus.d
        object.__setattr__(self, "c", self.c % d)
        object.__setattr__(self, "p", tuple(v % d for v in self.p))
        object.__setattr__(self, "q", tuple(v % d for v in self.q))
        if len(self.p) != len(self.q):
            raise DimensionMismatchError("p and q lengths differ")

    @property
    def n(self):
        return len(self.p)


@dataclass(frozen=True)
class SymMat:
    """A symmetric n x n matrix over Z_d stored by its free entries.

    For n=2 the entries are (m1, m2, m3) encoding [[m1, m3/2], [m3/2, m2]];
    for n=1 just (m1,).  The half-entries never need to be materialised: the
    quadratic form and the doubled product 2*Phi*q are integral in the stored
    entries.
    """

    entries: tuple
    modulus: Modulus

    def __post_init__(self):
        d = self.modulus.d
        if len(self.entries) not in (1, 3):
            raise DimensionMismatchError("SymMat supports n=1 and n=2 only")
        object.__setattr__(self, "entries", tuple(v % d for v in self.entries))

    @property
    def n(self):
        return 1 if len(self.entries) == 1 else 2

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)

    def __add__(self, other: "SymMat") -> "SymMat":
        if self.modulus.d != other.modulus.d:
            raise MixedModulusError("mixed moduli in SymMat addition")
        return SymMat(
            tuple(a + b for a, b in zip(self.entries, other.entries)), self.modulus
        )

    def __neg__(self) -> "SymMat":
        return SymMat(tuple(-v for v in self.entries), self.modulus)

    def scale(self, k: int) -> "SymMat":
        return SymMat(tuple(k * v for v in self.entries), self.modulus)

    def doubled_apply(self, q: tuple) -> tuple:
        """2 * Phi * q, integral in the stored entries."""
        d = self.modulus.d
        if self.n == 1:
            return ((2 * self.entries[0] * q[0]) % d,)
        m1, m2, m3 = self.entries
        return (
            (2 * m1 * q[0] + m3 * q[1]) % d,
            (m3 * q[0] + 2 * m2 * q[1]) % d,
        )

    def apply(self, q: tuple) -> tuple:
        """Phi * q (uses the inverse of 2 mod d for the off-diagonal)."""
        h = self.modulus.half_unit
        return tuple((h * v) % self.modulus.d for v in self.doubled_apply(q))

    def quad_form(self, q: tuple) -> int:
        """q^t Phi q; the off-diagonal contribution doubles so this is integral."""
        d = self.modulus.d
        if self.n == 1:
            return (self.entries[0] * q[0] * q[0]) % d
        m1, m2, m3 = self.entries
        return (m1 * q[0] * q[0] + m2 * q[1] * q[1] + m3 * q[0] * q[1]) % d


def zero_symmat(mod: Modulus, n: int = 2) -> SymMat:
    return SymMat((0,) if n == 1 else (0, 0, 0), mod)


@dataclass(frozen=True)
class AlmostDiagClifford:
    """w^c D_Phi Z^p X^q."""

    c: int
    phi: SymMat
    p: tuple
    q: tuple
    modulus: Modulus

    def __post_init__(self):
        d = self.modulus.d
        object.__setattr__(self, "c", self.c % d)
        object.__setattr__(self, "p", tuple(v % d for v in self.p))
        object.__setattr__(self, "q", tuple(v % d for v in self.q))
        if self.phi.n != len(self.p):
            raise DimensionMismatchError("Phi size does not match p, q")

    @property
    def n(self):
        return len(self.p)

    def pauli_part(self) -> PauliOp:
        return PauliOp(self.c, self.p, self.q, self.modulus)


def identity_gate(mod: Modulus, n: int = 2) -> AlmostDiagClifford:
    z = (0,) * n
    return AlmostDiagClifford(0, zero_symmat(mod, n), z, z, mod)


def pauli_mul(a: PauliOp, b: PauliOp) -> PauliOp:
    """Normal-ordered product: X^q1 moves right through Z^p2 at phase -q1.p2."""
    if a.modulus.d != b.modulus.d:
        raise MixedModulusError("mixed moduli in pauli_mul")
    if a.n != b.n:
        raise DimensionMismatchError("qudit counts differ")
    d = a.modulus.d
    cross = sum(x * y for x, y in zip(a.q, b.p))
    return PauliOp(
        (a.c + b.c - cross) % d,
        tuple(x + y for x, y in zip(a.p, b.p)),
        tuple(x + y for x, y in zip(a.q, b.q)),
        a.modulus,
    )


def conj_pauli_by_quad(phi: SymMat, pauli: PauliOp) -> PauliOp:
    """D_Phi P D_Phi^* for a Pauli P; see the module docstring for the form."""
    d = pauli.modulus.d
    shift = phi.doubled_apply(pauli.q)
    return PauliOp(
        (pauli.c - phi.quad_form(pauli.q)) % d,
        tuple(x + s for x, s in zip(pauli.p, shift)),
        pauli.q,
        pauli.modulus,
    )


def almost_diag_mul(a: AlmostDiagClifford, b: AlmostDiagClifford) -> AlmostDiagClifford:
    """Product of almost-diagonal gates: the Phi parts add, and the Pauli
    parts combine after commuting a's Pauli past b's diagonal."""
    if a.modulus.d != b.modulus.d:
        raise MixedModulusError("mixed moduli in almost_diag_mul")
    if a.n != b.n:
        raise DimensionMismatchError("qudit counts differ")
    # Z^pa X^qa . D_phib = D_phib . (D_phib^* Z^pa X^qa D_phib)
    moved = conj_pauli_by_quad(-b.phi, a.pauli_part())
    combined = pauli_mul(moved, b.pauli_part())
    return AlmostDiagClifford(
        combined.c, a.phi + b.phi, combined.p, combined.q, a.modulus
    )


def adc_pow(a: AlmostDiagClifford, k: int) -> AlmostDiagClifford:
    k %= a.modulus.d
    result = identity_gate(a.modulus, a.n)
    base = a
    while k:
        if k & 1:
            result = almost_diag_mul(result, base)
        base = almost_diag_mul(base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class ConjugateTuple:
    """Candidate images (u1, v1, u2, v2) of (Z1, X1, Z2, X2) under G . G^*."""

    u1: AlmostDiagClifford
    v1: AlmostDiagClifford
    u2: AlmostDiagClifford
    v2: AlmostDiagClifford

    def gates(self):
        return (self.u1, self.v1, self.u2, self.v2)

    @property
    def modulus(self):
        return self.u1.modulus


def word(t: ConjugateTuple, w: SympVec) -> AlmostDiagClifford:
    """u1^r1 v1^k1 u2^r2 v2^k2 for w = (r1, k1, r2, k2) interleaved."""
    r1, k1, r2, k2 = w.coords
    out = adc_pow(t.u1, r1)
    out = almost_diag_mul(out, adc_pow(t.v1, k1))
    out = almost_diag_mul(out, adc_pow(t.u2, r2))
    out = almost_diag_mul(out, adc_pow(t.v2, k2))
    return out


_CIJ = {(0, 1): 1, (2, 3): 1}


def tuple_satisfies_polyeqns(t: ConjugateTuple) -> bool:
    """The 18 scalar membership equations for conjugate tuples (n=2).

    For each of the six pairs i<j: the two components of Phi_i q_j - Phi_j q_i
    vanish (compared doubled, which is equivalent for odd d), and the scalar
    q_i^t Phi_j q_i - q_j^t Phi_i q_j + p_i.q_j - p_j.q_i equals 1 for the
    pairs (u1,v1), (u2,v2) and 0 otherwise.
    """
    gates = t.gates()
    d = t.modulus.d
    for i in range(4):
        for j in range(i + 1, 4):
            gi, gj = gates[i], gates[j]
            if gi.phi.doubled_apply(gj.q) != gj.phi.doubled_apply(gi.q):
                return False
            lhs = (
                gj.phi.quad_form(gi.q)
                - gi.phi.quad_form(gj.q)
                + sum(x * y for x, y in zip(gi.p, gj.q))
                - sum(x * y for x, y in zip(gj.p, gi.q))
            ) % d
            if lhs != _CIJ.get((i, j), 0):
                return False
    return True


def phi_coefficient_matrix(t: ConjugateTuple) -> FpMatrix:
    """3x4 matrix whose column i holds the stored entries of gate i's Phi."""
    cols = [g.phi.entries for g in t.gates()]
    return FpMatrix([[cols[j][r] for j in range(4)] for r in range(3)], t.modulus)


def phi1_reduce(t: ConjugateTuple) -> ConjugateTuple:
    """Rewrite a valid tuple so that the first gate's Phi is the zero matrix.

    The four Phi matrices live in a 3-dimensional space, so some nontrivial
    word of the tuple has vanishing diagonal part; extending that word's
    exponent vector to a symplectic basis and re-reading the tuple along the
    new basis zeroes Phi_1 while preserving validity.  Ties (kernel vector,
    semibasis extension, completion) are broken lexicographically.
    """
    if not tuple_satisfies_polyeqns(t):
        raise InvalidTupleError("phi1_reduce requires a polyeqns-valid tuple")
    mod = t.modulus
    d = mod.d
    K = phi_coefficient_matrix(t)
    kernel_vec = None
    for coords in itertools.product(range(d), repeat=4):
        if not any(coords):
            continue
        if all(
            sum(K.entries[r][j] * coords[j] for j in range(4)) % d == 0
            for r in range(3)
        ):
            kernel_vec = SympVec(coords, mod)
            break
    if kernel_vec is None:
        raise AssertionError("unreachable: 4 matrices in a 3-dim space")
    a = kernel_vec
    b = extend_to_semibasis(a)
    a, a_star, b, b_star = complete_symplectic_basis(a, b)
    reduced = ConjugateTuple(
        word(t, a), word(t, a_star), word(t, b), word(t, b_star)
    )
    if not reduced.u1.phi.is_zero():
        raise AssertionError("reduction failed to zero Phi_1")
    return reduced


def tuple_to_json(t: ConjugateTuple) -> dict:
    return {
        "d": t.modulus.d,
        "n": t.u1.n,
        "gates": [
            {
                "c": g.c,
                "phi": list(g.phi.entries),
                "p": list(g.p),
                "q": list(g.q),
            }
            for g in t.gates()
        ],
    }


def tuple_from_json(doc: dict) -> ConjugateTuple:
    mod = Modulus(doc["d"])
    gates = [
        AlmostDiagClifford(
            g["c"], SymMat(tuple(g["phi"]), mod), tuple(g["p"]), tuple(g["q"]), mod
        )
        for g in doc["gates"]
    ]
    if len(gates) != 4:
        raise InvalidTupleError("expected 4 gates in u1,v1,u2,v2 order")
    return ConjugateTuple(*gates)
