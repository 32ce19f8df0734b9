"""The third-level polynomial system, its linearisation, and the E/F pair.

Conventions:
  * variable order is Phi11,Phi12,Phi13, Phi21..Phi43, q11..q42, p11..p42
    (28 variables); with Phi_1 eliminated the three Phi1* names are dropped
    (25 variables);
  * Phi_i is [[Phi_i1, Phi_i3/2], [Phi_i3/2, Phi_i2]]; the rows coming from
    Phi_i q_j - Phi_j q_i are scaled by 2 before emission so every generator
    has integer coefficients (legal: d is odd, so 2 is a unit);
  * the six scalar equations and the rows of the linear system are ordered
    (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .multipoly import (
    MultiPoly,
    VarTable,
    exact_divide,
    grevlex_key,
    leading_coeff_sign_normalized,
    leading_term,
)


class AllPivotsZeroError(RuntimeError):
    pass


def third_level_vartable(phi1_zero: bool = False) -> VarTable:
    names = []
    lo = 2 if phi1_zero else 1
    for i in range(lo, 5):
        names += [f"Phi{i}{k}" for k in (1, 2, 3)]
    for i in range(1, 5):
        names += [f"q{i}1", f"q{i}2"]
    for i in range(1, 5):
        names += [f"p{i}1", f"p{i}2"]
    return VarTable(tuple(names))


def _var(table, name):
    if name not in table.names:
        return MultiPoly.zero(table)  # Phi1* in phi1_zero mode
    return MultiPoly.variable(table, name)


def _phi_times_q_doubled(table, i, j):
    """The two components of 2 * Phi_i * q_j as polynomials."""
    a = _var(table, f"Phi{i}1")
    b = _var(table, f"Phi{i}2")
    c = _var(table, f"Phi{i}3")
    qx = _var(table, f"q{j}1")
    qy = _var(table, f"q{j}2")
    two = MultiPoly.const(table, 2)
    return (two * a * qx + c * qy, c * qx + two * b * qy)


def _quad_form(table, i, j):
    """q_j^t Phi_i q_j; integral since the off-diagonal doubles."""
    a = _var(table, f"Phi{i}1")
    b = _var(table, f"Phi{i}2")
    c = _var(table, f"Phi{i}3")
    qx = _var(table, f"q{j}1")
    qy = _var(table, f"q{j}2")
    return a * qx * qx + b * qy * qy + c * qx * qy


def _dot_pq(table, i, j):
    return sum(
        (
            _var(table, f"p{i}{k}") * _var(table, f"q{j}{k}")
            for k in (1, 2)
        ),
        MultiPoly.zero(table),
    )


PAIRS = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
C_IJ = {(1, 2): 1, (3, 4): 1}


def build_third_level_system(phi1_zero: bool = False):
    """The 18 generators of the conjugate-tuple membership system.

    For each pair i<j: the two (doubled) components of Phi_i q_j - Phi_j q_i,
    then the scalar q_i^t Phi_j q_i - q_j^t Phi_i q_j + p_i.q_j - p_j.q_i - c_ij.
    """
    table = third_level_vartable(phi1_zero)
    polys = []
    for i, j in PAIRS:
        lx, ly = _phi_times_q_doubled(table, i, j)
        rx, ry = _phi_times_q_doubled(table, j, i)
        polys.append(lx - rx)
        polys.append(ly - ry)
    for i, j in PAIRS:
        f = (
            _quad_form(table, j, i)
            - _quad_form(table, i, j)
            + _dot_pq(table, i, j)
            - _dot_pq(table, j, i)
            - MultiPoly.const(table, C_IJ.get((i, j), 0))
        )
        polys.append(f)
    return polys


def build_semiclifford_system():
    """The three 2x2 minors of the (Phi_3, Phi_4) kernel-matrix columns."""
    table = third_level_vartable(phi1_zero=True)

    def v(name):
        return MultiPoly.variable(table, name)

    return [
        v("Phi31") * v("Phi42") - v("Phi32") * v("Phi41"),
        v("Phi31") * v("Phi43") - v("Phi33") * v("Phi41"),
        v("Phi32") * v("Phi43") - v("Phi33") * v("Phi42"),
    ]


@dataclass
class PolyMatrix:
    entries: list  # rows of MultiPoly

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0


def build_linear_system():
    """The 6x8 coefficient matrix A and right-hand side b of the linearised
    scalar equations, viewed as linear in the p variables.

    Row (i,j) of A has q_j^t in block i and -q_i^t in block j; the entry of b
    is q_j^t Phi_i q_j - q_i^t Phi_j q_i + c_ij.
    """
    table = third_level_vartable(phi1_zero=False)
    zero = MultiPoly.zero(table)
    a_rows = []
    b_entries = []
    for i, j in PAIRS:
        row = [zero] * 8
        for k in (1, 2):
            row[2 * (i - 1) + (k - 1)] = _var(table, f"q{j}{k}")
            row[2 * (j - 1) + (k - 1)] = -_var(table, f"q{i}{k}")
        a_rows.append(row)
        b_entries.append(
            _quad_form(table, i, j)
            - _quad_form(table, j, i)
            + MultiPoly.const(table, C_IJ.get((i, j), 0))
        )
    return PolyMatrix(a_rows), b_entries


def _poly_det(rows):
    """Determinant by cofactor expansion along the sparsest column."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    # pick column with the most zero entries
    zero_counts = [
        sum(1 for r in range(n) if rows[r][c].is_zero()) for c in range(n)
    ]
    col = max(range(n), key=lambda c: zero_counts[c])
    acc = None
    for r in range(n):
        e = rows[r][col]
        if e.is_zero():
            continue
        sub = [
            [rows[rr][cc] for cc in range(n) if cc != col]
            for rr in range(n)
            if rr != r
        ]
        term = e * _poly_det(sub)
        if (r + col) % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return rows[0][0].__class__.zero(rows[0][0].vars, rows[0][0].domain)
    return acc


def minors(M: PolyMatrix, order: int):
    """All order x order minors of M (row/column combinations in lex order)."""
    out = []
    for rsel in itertools.combinations(range(M.rows), order):
        for csel in itertools.combinations(range(M.cols), order):
            sub = [[M.entries[r][c] for c in csel] for r in rsel]
            out.append(_poly_det(sub))
    return out


def bareiss_eliminate(augmented: PolyMatrix):
    """Fraction-free Bareiss elimination of the 6x9 augmented matrix [A | b].

    Pivots are chosen in the leftmost column with a nonzero polynomial entry,
    topmost such row.  The A-block has rank 5 symbolically, so elimination
    stalls with exactly one remaining row whose A-part is identically zero;
    E is that row's b-entry and F is the product of the (Gaussian) pivots,
    i.e. the last Bareiss pivot.  Both are returned with integer content
    removed and the leading grevlex coefficient made positive.
    """
    mat = [row[:] for row in augmented.entries]
    nrows = len(mat)
    ncols = len(mat[0])
    a_cols = ncols - 1
    zero = MultiPoly.zero(mat[0][0].vars, mat[0][0].domain)
    one = MultiPoly.const(mat[0][0].vars, 1, mat[0][0].domain)

    prev_pivot = one
    pivot = one
    r = 0
    for c in range(a_cols):
        if r >= nrows:
            break
        pr = next((i for i in range(r, nrows) if not mat[i][c].is_zero()), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        prev_pivot, pivot = pivot, mat[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                num = pivot * mat[i][j] - mat[i][c] * mat[r][j]
                mat[i][j] = exact_divide(num, prev_pivot)
            mat[i][c] = zero
        r += 1

    leftover = [i for i in range(r, nrows)]
    if not leftover:
        raise AllPivotsZeroError("A-block eliminated to full rank; expected rank 5")
    for i in leftover:
        if any(not mat[i][c].is_zero() for c in range(a_cols)):
            raise AllPivotsZeroError("nonzero A-part left after elimination")
    if len(leftover) != 1:
        raise AllPivotsZeroError(f"expected one residual row, found {len(leftover)}")

    e_poly = mat[leftover[0]][a_cols]
    f_poly = pivot
    e_poly = leading_coeff_sign_normalized(e_poly.integer_content_removed())
    f_poly = leading_coeff_sign_normalized(f_poly.integer_content_removed())
    return e_poly, f_poly


def derive_ef():
    """E and F from the canonical linear system (convenience wrapper)."""
    A, b = build_linear_system()
    aug = PolyMatrix([row + [bv] for row, bv in zip(A.entries, b)])
    return bareiss_eliminate(aug)


def eval_poly(f: MultiPoly, point, d: int) -> int:
    """Exact evaluation of f mod d; ``point`` maps variable name -> int."""
    vec = []
    for name in f.vars.names:
        if name not in point:
            raise KeyError(f"missing assignment for {name}")
        vec.append(point[name])
    return f.eval_mod(vec, d)


def poly_exponent_arrays(f: MultiPoly, d: int):
    """(coeffs, exponents) numpy arrays for batched evaluation mod d."""
    coeffs = []
    exps = []
    for e, c in f.terms.items():
        if f.domain == "Q":
            cv = (c.numerator % d) * pow(c.denominator % d, -1, d) % d
        else:
            cv = c % d
        coeffs.append(cv)
        exps.append(e)
    return np.asarray(coeffs, dtype=np.int64), np.asarray(exps, dtype=np.int64)


def eval_batch(f: MultiPoly, points: np.ndarray, d: int) -> np.ndarray:
    """Evaluate f at N points mod d; ``points`` is (N, nvars) aligned with
    f's variable table."""
    coeffs, exps = poly_exponent_arrays(f, d)
    n = points.shape[0]
    acc = np.zeros(n, dtype=np.int64)
    pts = points.astype(np.int64) % d
    for cv, e in zip(coeffs, exps):
        term = np.full(n, cv, dtype=np.int64)
        for j, k in enumerate(e):
            if k:
                term = term * pow_mod_array(pts[:, j], int(k), d) % d
        acc = (acc + term) % d
    return acc


def pow_mod_array(a: np.ndarray, k: int, d: int) -> np.ndarray:
    out = np.ones_like(a)
    base = a % d
    while k:
        if k & 1:
            out = out * base % d
        base = base * base % d
        k >>= 1
    return out
