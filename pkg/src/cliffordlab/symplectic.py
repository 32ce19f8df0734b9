"""The symplectic vector space Z_d^{2n} of Pauli exponent vectors.

Coordinates are stored interleaved per qudit: (z1, x1, z2, x2, ...).  The
symplectic product of u and v is sum_i (u_zi * v_xi - u_xi * v_zi) mod d.
Block-form (p, q) data is converted to this layout at module boundaries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .modring import FpElem, MixedModulusError, Modulus


class DimensionMismatchError(ValueError):
    pass


class ZeroVectorError(ValueError):
    pass


class NotASemibasisError(ValueError):
    pass


@dataclass(frozen=True)
class SympVec:
    """A vector in Z_d^{2n}, interleaved layout (z1, x1, z2, x2, ...)."""

    coords: tuple
    modulus: Modulus

    def __post_init__(self):
        if len(self.coords) % 2 != 0:
            raise DimensionMismatchError("symplectic vectors have even length")
        object.__setattr__(
            self, "coords", tuple(c % self.modulus.d for c in self.coords)
        )

    def __len__(self):
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "SympVec") -> "SympVec":
        _check_pair(self, other)
        d = self.modulus.d
        return SympVec(
            tuple((a + b) % d for a, b in zip(self.coords, other.coords)),
            self.modulus,
        )

    def scale(self, k: int) -> "SympVec":
        d = self.modulus.d
        return SympVec(tuple((k * c) % d for c in self.coords), self.modulus)


def _check_pair(u: SympVec, v: SympVec):
    if u.modulus.d != v.modulus.d:
        raise MixedModulusError("mixed moduli in symplectic product")
    if len(u) != len(v):
        raise DimensionMismatchError(f"lengths {len(u)} and {len(v)} differ")


def sym_product(u: SympVec, v: SympVec) -> FpElem:
    """[(p1,q1),(p2,q2)] = p1.q2 - p2.q1, evaluated in the interleaved layout."""
    _check_pair(u, v)
    d = u.modulus.d
    total = 0
    for i in range(0, len(u), 2):
        total += u.coords[i] * v.coords[i + 1] - u.coords[i + 1] * v.coords[i]
    return FpElem(total % d, u.modulus)


@dataclass
class FpMatrix:
    """A dense matrix over Z_d with plain-int entries reduced mod d."""

    entries: list  # list of row lists
    modulus: Modulus

    def __post_init__(self):
        d = self.modulus.d
        ncols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != ncols:
                raise DimensionMismatchError("ragged matrix")
        self.entries = [[e % d for e in row] for row in self.entries]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


def rref(M: FpMatrix):
    """Reduced row echelon form; returns (rref rows, pivot column list)."""
    d = M.modulus.d
    mat = [row[:] for row in M.entries]
    nrows, ncols = M.rows, M.cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pr = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pinv = pow(mat[r][c], -1, d)
        mat[r] = [(e * pinv) % d for e in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % d for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat, pivots


def rank_and_kernel(M: FpMatrix):
    """Gaussian elimination over Z_d.

    Returns (rank, kernel_basis) where the kernel basis vectors are tuples of
    ints spanning {v : Mv = 0}; the basis has size cols - rank.
    """
    d = M.modulus.d
    mat, pivots = rref(M)
    rank = len(pivots)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * M.cols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-mat[r][fc]) % d
        basis.append(tuple(vec))
    return rank, basis


def solve_affine(M: FpMatrix, b: list):
    """One solution x of Mx = b over Z_d, or None if inconsistent."""
    d = M.modulus.d
    aug = FpMatrix([row + [bv] for row, bv in zip(M.entries, b)], M.modulus)
    mat, pivots = rref(aug)
    if M.cols in pivots:
        return None
    x = [0] * M.cols
    for r, pc in enumerate(pivots):
        x[pc] = mat[r][M.cols] % d
    return tuple(x)


def is_lagrangian_semibasis(vs) -> bool:
    """True iff the n given vectors of Z_d^{2n} are linearly independent and
    pairwise symplectically orthogonal."""
    vs = list(vs)
    if not vs:
        return False
    n2 = len(vs[0])
    if len(vs) != n2 // 2:
        return False
    mod = vs[0].modulus
    for u, v in itertools.combinations(vs, 2):
        if sym_product(u, v).value != 0:
            return False
    M = FpMatrix([list(v.coords) for v in vs], mod)
    rank, _ = rank_and_kernel(M)
    return rank == len(vs)


def iter_vectors(mod: Modulus, length: int):
    """All vectors of Z_d^length in lexicographic order."""
    for coords in itertools.product(range(mod.d), repeat=length):
        yield SympVec(coords, mod)


def extend_to_semibasis(v: SympVec) -> SympVec:
    """Lexicographically first v' with [v, v'] = 0 and {v, v'} independent.

    Existence for nonzero v follows from counting: d^3 vectors pair to zero
    with v while only d are scalar multiples of it.
    """
    if v.is_zero():
        raise ZeroVectorError("cannot extend the zero vector")
    if len(v) != 4:
        raise DimensionMismatchError("implemented for n=2 (length-4 vectors)")
    for w in iter_vectors(v.modulus, 4):
        if w.is_zero():
            continue
        if sym_product(v, w).value != 0:
            continue
        if is_lagrangian_semibasis([v, w]):
            return w
    raise AssertionError("unreachable: completing vector always exists")


def complete_symplectic_basis(a: SympVec, b: SympVec):
    """Symplectic Gram-Schmidt completion of the Lagrangian semibasis {a, b}.

    Returns (a, a_star, b, b_star) with [a,a*] = [b,b*] = 1 and all other
    pairings zero; ties are broken by lexicographic scan so the output is
    deterministic.
    """
    if not is_lagrangian_semibasis([a, b]):
        raise NotASemibasisError("{a, b} is not a Lagrangian semibasis")
    a_star = None
    for w in iter_vectors(a.modulus, 4):
        if sym_product(a, w).value == 1 and sym_product(b, w).value == 0:
            a_star = w
            break
    b_star = None
    for w in iter_vectors(a.modulus, 4):
        if (
            sym_product(b, w).value == 1
            and sym_product(a, w).value == 0
            and sym_product(a_star, w).value == 0
        ):
            b_star = w
            break
    if a_star is None or b_star is None:
        raise AssertionError("unreachable: symplectic form is nondegenerate")
    return a, a_star, b, b_star


def random_symplectic_basis(mod: Modulus, rng):
    """A uniformly-randomish symplectic basis (a, a*, b, b*) of Z_d^4.

    Used to scramble conjugate tuples when sampling; only the pairing
    conditions matter, not the exact distribution.
    """
    d = mod.d

    def rand_vec():
        return SympVec(tuple(int(rng.integers(d)) for _ in range(4)), mod)

    while True:
        a = rand_vec()
        if not a.is_zero():
            break
    while True:
        v = rand_vec()
        s = sym_product(a, v).value
        if s != 0:
            a_star = v.scale(pow(s, -1, d))
            break
    # complement of span{a, a*} under the form
    M = FpMatrix(
        [
            [a.coords[1], -a.coords[0], a.coords[3], -a.coords[2]],
            [a_star.coords[1], -a_star.coords[0], a_star.coords[3], -a_star.coords[2]],
        ],
        mod,
    )
    _, kern = rank_and_kernel(M)
    assert len(kern) == 2
    k0 = SympVec(kern[0], mod)
    k1 = SympVec(kern[1], mod)
    while True:
        b = k0.scale(int(rng.integers(d))) + k1.scale(int(rng.integers(d)))
        if not b.is_zero():
            break
    while True:
        w = k0.scale(int(rng.integers(d))) + k1.scale(int(rng.integers(d)))
        s = sym_product(b, w).value
        if s != 0:
            b_star = w.scale(pow(s, -1, d))
            break
    return a, a_star, b, b_star
