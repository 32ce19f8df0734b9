"""Semi-Clifford decision procedures for two-qudit conjugate tuples.

A simplified third-level gate is semi-Clifford iff the kernel of the 3x4
matrix of its Phi entries contains a Lagrangian semibasis.  Two deciders are
provided: a direct kernel-pair search (any small d), and the closed-form
three-minors criterion valid when Phi_1 = 0.  Their equivalence on the full
d=3 sweep is one of the acceptance checks.
"""

from __future__ import annotations

import itertools

from .gatealg import ConjugateTuple, phi_coefficient_matrix
from .symplectic import (
    FpMatrix,
    SympVec,
    is_lagrangian_semibasis,
    rank_and_kernel,
)


class DimensionTooLargeError(ValueError):
    pass


class PreconditionPhi1NonzeroError(ValueError):
    pass


def kernel_matrix(t: ConjugateTuple) -> FpMatrix:
    """3x4 matrix, column i = stored Phi entries of gate i (u1, v1, u2, v2)."""
    return phi_coefficient_matrix(t)


def _kernel_vectors(M: FpMatrix):
    """All vectors of the kernel of M, from a kernel basis."""
    d = M.modulus.d
    _, basis = rank_and_kernel(M)
    for coeffs in itertools.product(range(d), repeat=len(basis)):
        vec = [0] * M.cols
        for c, bv in zip(coeffs, basis):
            if c:
                for i, x in enumerate(bv):
                    vec[i] = (vec[i] + c * x) % d
        yield tuple(vec)


def is_semiclifford_direct(t: ConjugateTuple) -> bool:
    """Search all pairs of nonzero kernel vectors for a Lagrangian semibasis."""
    mod = t.modulus
    if mod.d > 13:
        raise DimensionTooLargeError("kernel enumeration capped at d <= 13")
    M = kernel_matrix(t)
    vecs = [SympVec(v, mod) for v in _kernel_vectors(M) if any(v)]
    for a, b in itertools.combinations(vecs, 2):
        if is_lagrangian_semibasis([a, b]):
            return True
    return False


def minors_criterion(t: ConjugateTuple) -> bool:
    """With Phi_1 = 0: semi-Clifford iff the three 2x2 minors of the last two
    kernel-matrix columns vanish (the columns of u2 and v2 are proportional)."""
    if not t.u1.phi.is_zero():
        raise PreconditionPhi1NonzeroError("minors criterion requires Phi_1 = 0")
    d = t.modulus.d
    a = t.u2.phi.entries  # (Phi_31, Phi_32, Phi_33) ordering: (m1, m2, m3)
    b = t.v2.phi.entries
    return (
        (a[0] * b[1] - a[1] * b[0]) % d == 0
        and (a[0] * b[2] - a[2] * b[0]) % d == 0
        and (a[1] * b[2] - a[2] * b[1]) % d == 0
    )
