"""Exhaustive and sampled verification over Z_d of the gate-membership system.

The algebraic set T consists of tuples (Phi_2, Phi_3, Phi_4, q_1..q_4) with
Phi_1 = 0 that satisfy the twelve vector compatibility equations and whose
linear system in the p-variables is consistent.  This module enumerates T
exactly for d = 3 (d = 5 behind an explicit flag), checks the semi-Clifford
minors on every point, validates the E/F cover, and provides samplers for
downstream statistical tests.

Enumeration strategy: stratify by q_1.  The pair equations against gate 1
reduce to Phi_j q_1 = 0, so each stratum draws its gate descriptors
(Phi, q) from a precomputed kernel set; descriptor pairs are pre-filtered
with a numpy compatibility table before the per-triple consistency test,
which runs in the compiled kernel.  p-variables are never enumerated:
consistency is decided by rank over Z_d, and each consistent point has
exactly d^(8 - rank) completions.
"""

from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass, field

import numpy as np

from .gatealg import (
    AlmostDiagClifford,
    ConjugateTuple,
    SymMat,
    word,
)
from .kernels import batch_consistency, rank_mod
from .modring import Modulus
from .polysys import derive_ef, eval_batch
from .symplectic import (
    FpMatrix,
    random_symplectic_basis,
    rank_and_kernel,
    solve_affine,
)

# rows of the linearised system, as 0-based gate-index pairs
_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
_CVEC = np.array([1, 0, 0, 0, 0, 1], dtype=np.int64)

_CHUNK = 1 << 15


class UnsupportedDimensionError(ValueError):
    pass


@dataclass(frozen=True)
class SolutionPoint:
    """A point of T: (Phi, q) data with Phi_1 = 0; p-part optional."""

    d: int
    phis: tuple  # 4 triples (m1, m2, m3); phis[0] == (0, 0, 0)
    qs: tuple    # 4 pairs
    ps: tuple = None  # 4 pairs, or None when only the projection is stored

    def to_json(self):
        doc = {"d": self.d, "phis": [list(p) for p in self.phis],
               "qs": [list(q) for q in self.qs]}
        if self.ps is not None:
            doc["ps"] = [list(p) for p in self.ps]
        return doc


@dataclass
class VerificationReport:
    check: str
    d: int
    points_scanned: int
    T_count: int
    violations: list = field(default_factory=list)
    elapsed: float = 0.0
    workers: int = 1

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self):
        return {
            "check": self.check,
            "d": self.d,
            "points_scanned": self.points_scanned,
            "T_count": self.T_count,
            "violations": [v.to_json() for v in self.violations],
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "workers": self.workers,
            "passed": self.passed,
        }


def _quad(phi, q):
    return phi[0] * q[0] * q[0] + phi[1] * q[1] * q[1] + phi[2] * q[0] * q[1]


def _doubled_apply(phi, q, d):
    return (
        (2 * phi[0] * q[0] + phi[2] * q[1]) % d,
        (phi[2] * q[0] + 2 * phi[1] * q[1]) % d,
    )


def linear_system_arrays(phis, qs, d):
    """Numeric (A, b) of the p-linear system for stacked points.

    ``phis`` is (N, 4, 3) and ``qs`` is (N, 4, 2); returns A of shape
    (N, 6, 8) and b of shape (N, 6), both reduced mod d.
    """
    phis = np.asarray(phis, dtype=np.int64)
    qs = np.asarray(qs, dtype=np.int64)
    n = qs.shape[0]
    A = np.zeros((n, 6, 8), dtype=np.int64)
    b = np.zeros((n, 6), dtype=np.int64)
    for r, (i, j) in enumerate(_PAIRS):
        A[:, r, 2 * i:2 * i + 2] = qs[:, j, :]
        A[:, r, 2 * j:2 * j + 2] = (-qs[:, i, :]) % d
        quad_ij = (
            phis[:, i, 0] * qs[:, j, 0] ** 2
            + phis[:, i, 1] * qs[:, j, 1] ** 2
            + phis[:, i, 2] * qs[:, j, 0] * qs[:, j, 1]
        )
        quad_ji = (
            phis[:, j, 0] * qs[:, i, 0] ** 2
            + phis[:, j, 1] * qs[:, i, 1] ** 2
            + phis[:, j, 2] * qs[:, i, 0] * qs[:, i, 1]
        )
        b[:, r] = (quad_ij - quad_ji + _CVEC[r]) % d
    return A % d, b


def point_in_T(pt: SolutionPoint) -> bool:
    """Membership test for one point: vector equations plus either the exact
    scalar equations (p-part present) or linear-system consistency."""
    d = pt.d
    if any(v % d for v in pt.phis[0]):
        raise ValueError("points are stored with Phi_1 = 0")
    for i, j in _PAIRS:
        if _doubled_apply(pt.phis[i], pt.qs[j], d) != _doubled_apply(
            pt.phis[j], pt.qs[i], d
        ):
            return False
    if pt.ps is not None:
        for r, (i, j) in enumerate(_PAIRS):
            lhs = (
                _quad(pt.phis[j], pt.qs[i])
                - _quad(pt.phis[i], pt.qs[j])
                + pt.ps[i][0] * pt.qs[j][0]
                + pt.ps[i][1] * pt.qs[j][1]
                - pt.ps[j][0] * pt.qs[i][0]
                - pt.ps[j][1] * pt.qs[i][1]
            ) % d
            if lhs != _CVEC[r]:
                return False
        return True
    A, b = linear_system_arrays(
        np.asarray(pt.phis)[None, :, :], np.asarray(pt.qs)[None, :, :], d
    )
    return bool(batch_consistency(A, b, d)[0])


def completion_count(pt: SolutionPoint) -> int:
    """Number of p-assignments completing a (Phi, q) projection: d^(8 - rank)."""
    d = pt.d
    A, b = linear_system_arrays(
        np.asarray(pt.phis)[None, :, :], np.asarray(pt.qs)[None, :, :], d
    )
    if not batch_consistency(A, b, d)[0]:
        return 0
    return d ** (8 - rank_mod(A[0], d))


def _phi_kernel(d: int, q1) -> list:
    """All symmetric-matrix descriptors (m1, m2, m3) with Phi q1 = 0."""
    out = []
    for m1 in range(d):
        for m2 in range(d):
            for m3 in range(d):
                if _doubled_apply((m1, m2, m3), q1, d) == (0, 0):
                    out.append((m1, m2, m3))
    return out


def _stratum_points(args):
    """All T-points of one q_1 stratum, as plain (phis, qs) tuples in a
    deterministic order.  Module-level so worker processes can run it."""
    d, q1 = args
    phi_opts = _phi_kernel(d, q1)
    descs = [
        (phi, q)
        for phi in phi_opts
        for q in itertools.product(range(d), repeat=2)
    ]
    k = len(descs)
    dphi = np.array([p for p, _ in descs], dtype=np.int64)
    dq = np.array([q for _, q in descs], dtype=np.int64)
    # compat[a, b]: Phi_a q_b == Phi_b q_a (both components, doubled form)
    c1 = (2 * np.outer(dphi[:, 0], dq[:, 0]) + np.outer(dphi[:, 2], dq[:, 1])) % d
    c2 = (np.outer(dphi[:, 2], dq[:, 0]) + 2 * np.outer(dphi[:, 1], dq[:, 1])) % d
    compat = (c1 == c1.T) & (c2 == c2.T)

    points = []
    scanned = 0
    tri_a, tri_b, tri_c = [], [], []

    def flush():
        nonlocal scanned
        if not tri_a:
            return
        ia = np.array(tri_a, dtype=np.int64)
        ib = np.array(tri_b, dtype=np.int64)
        ic = np.array(tri_c, dtype=np.int64)
        n = len(ia)
        phis = np.zeros((n, 4, 3), dtype=np.int64)
        qs = np.zeros((n, 4, 2), dtype=np.int64)
        qs[:, 0, :] = np.asarray(q1, dtype=np.int64)
        for slot, idx in ((1, ia), (2, ib), (3, ic)):
            phis[:, slot, :] = dphi[idx]
            qs[:, slot, :] = dq[idx]
        A, b = linear_system_arrays(phis, qs, d)
        mask = batch_consistency(A, b, d)
        scanned += n
        for t in np.nonzero(mask)[0]:
            points.append(
                (
                    tuple(tuple(row) for row in phis[t]),
                    tuple(tuple(row) for row in qs[t]),
                )
            )
        tri_a.clear()
        tri_b.clear()
        tri_c.clear()

    for a in range(k):
        row_a = compat[a]
        for b in np.nonzero(row_a)[0]:
            cands = np.nonzero(row_a & compat[b])[0]
            tri_a.extend([a] * len(cands))
            tri_b.extend([b] * len(cands))
            tri_c.extend(cands.tolist())
            if len(tri_a) >= _CHUNK:
                flush()
    flush()
    return q1, scanned, points


def _strata(d: int):
    return [(d, q1) for q1 in itertools.product(range(d), repeat=2)]


def enumerate_T(
    mod: Modulus,
    emit=None,
    jobs: int = 1,
    allow_large: bool = False,
) -> VerificationReport:
    """Visit every point of T(Z_d) exactly once, in a deterministic order
    independent of the worker count."""
    d = mod.d
    if d not in (3, 5) or (d == 5 and not allow_large):
        raise UnsupportedDimensionError(
            "enumeration supports d=3 (and d=5 with allow_large=True)"
        )
    start = time.monotonic()
    strata = _strata(d)
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_stratum_points, strata)
    else:
        results = [_stratum_points(s) for s in strata]
    results.sort(key=lambda r: r[0])
    scanned = 0
    count = 0
    for _, sc, pts in results:
        scanned += sc
        for phis, qs in pts:
            count += 1
            if emit is not None:
                emit(SolutionPoint(d, phis, qs))
    return VerificationReport(
        check="enumerate",
        d=d,
        points_scanned=scanned,
        T_count=count,
        elapsed=time.monotonic() - start,
        workers=jobs,
    )


def _minors_vanish(pt: SolutionPoint) -> bool:
    """True when the three 2x2 minors of the (Phi_3, Phi_4) columns vanish."""
    d = pt.d
    a = pt.phis[2]
    b = pt.phis[3]
    return (
        (a[0] * b[1] - a[1] * b[0]) % d == 0
        and (a[0] * b[2] - a[2] * b[0]) % d == 0
        and (a[1] * b[2] - a[2] * b[1]) % d == 0
    )


def verify_main_theorem(
    mod: Modulus, jobs: int = 1, allow_large: bool = False
) -> VerificationReport:
    """Every point of T must satisfy the three semi-Clifford minors; the
    converse containment holds by construction."""
    violations = []
    points_seen = [0]

    def emit(pt):
        points_seen[0] += 1
        if not _minors_vanish(pt):
            violations.append(pt)

    rep = enumerate_T(mod, emit=emit, jobs=jobs, allow_large=allow_large)
    return VerificationReport(
        check="main-theorem",
        d=mod.d,
        points_scanned=rep.points_scanned,
        T_count=rep.T_count,
        violations=violations,
        elapsed=rep.elapsed,
        workers=jobs,
    )


def verify_extraneous_properties(mod: Modulus, jobs: int = 1) -> VerificationReport:
    """No T-point has q_1 = q_2 = 0 or q_3 = q_4 = 0."""
    violations = []

    def emit(pt):
        z = (0, 0)
        if (pt.qs[0] == z and pt.qs[1] == z) or (pt.qs[2] == z and pt.qs[3] == z):
            violations.append(pt)

    rep = enumerate_T(mod, emit=emit, jobs=jobs)
    return VerificationReport(
        check="extraneous",
        d=mod.d,
        points_scanned=rep.points_scanned,
        T_count=rep.T_count,
        violations=violations,
        elapsed=rep.elapsed,
        workers=jobs,
    )


def _point_var_array(phis, qs, nvars):
    """Rows of variable assignments aligned with the 28-name table:
    Phi11..Phi43, q11..q42, p11..p42 (p-part zeroed; E and F do not use it)."""
    phis = np.asarray(phis, dtype=np.int64)
    qs = np.asarray(qs, dtype=np.int64)
    n = phis.shape[0]
    out = np.zeros((n, nvars), dtype=np.int64)
    out[:, 0:12] = phis.reshape(n, 12)
    out[:, 12:20] = qs.reshape(n, 8)
    return out


def _sample_eq11_points(d: int, count: int, rng):
    """Random points satisfying the twelve vector equations with Phi_1 = 0.

    Construction: draw q_1 and Phi_2..Phi_4 from the q_1-kernel, then solve
    the remaining pair equations, which are linear in (q_2, q_3, q_4), and
    draw a uniform solution.  Returns (phis, qs) arrays.
    """
    mod = Modulus(d)
    phis = np.zeros((count, 4, 3), dtype=np.int64)
    qs = np.zeros((count, 4, 2), dtype=np.int64)
    kernels = {}
    for s in range(count):
        q1 = (int(rng.integers(d)), int(rng.integers(d)))
        if q1 not in kernels:
            kernels[q1] = _phi_kernel(d, q1)
        opts = kernels[q1]
        trip = [opts[int(rng.integers(len(opts)))] for _ in range(3)]
        # pair equations among gates 2..4, linear in (q2, q3, q4)
        rows = []
        for (i, j) in ((1, 2), (1, 3), (2, 3)):
            pi, pj = trip[i - 1], trip[j - 1]
            for comp in range(2):
                row = [0] * 6
                # component of 2*Phi_i*q_j - 2*Phi_j*q_i
                ci = ((2 * pi[0], pi[2]), (pi[2], 2 * pi[1]))[comp]
                cj = ((2 * pj[0], pj[2]), (pj[2], 2 * pj[1]))[comp]
                row[2 * (j - 1)] = ci[0] % d
                row[2 * (j - 1) + 1] = ci[1] % d
                row[2 * (i - 1)] = (-cj[0]) % d
                row[2 * (i - 1) + 1] = (-cj[1]) % d
                rows.append(row)
        M = FpMatrix(rows, mod)
        part = solve_affine(M, [0] * len(rows))
        _, kern = rank_and_kernel(M)
        vec = list(part)
        for bvec in kern:
            c = int(rng.integers(d))
            vec = [(v + c * x) % d for v, x in zip(vec, bvec)]
        phis[s, 1:, :] = np.array(trip, dtype=np.int64)
        qs[s, 0, :] = q1
        qs[s, 1:, :] = np.array(vec, dtype=np.int64).reshape(3, 2)
    return phis, qs


_EF_CACHE = {}


def ef_polynomials():
    """The (E, F) pair from symbolic elimination, computed once per process."""
    if "ef" not in _EF_CACHE:
        _EF_CACHE["ef"] = derive_ef()
    return _EF_CACHE["ef"]


def verify_EF_cover(
    mod: Modulus, samples: int = 0, seed: int = 0, jobs: int = 1
) -> VerificationReport:
    """E = 0 or F = 0 on T-points, and (consistent and F != 0) implies E = 0.

    d = 3 runs over the full enumeration; larger d draws ``samples`` random
    points of the vector-equation locus and filters by consistency.
    """
    d = mod.d
    E, F = ef_polynomials()
    nvars = len(E.vars.names)
    start = time.monotonic()

    if d == 3:
        pts = []

        def emit(pt):
            pts.append((pt.phis, pt.qs))

        rep = enumerate_T(mod, emit=emit, jobs=jobs)
        phis = np.array([p for p, _ in pts], dtype=np.int64)
        qs = np.array([q for _, q in pts], dtype=np.int64)
        arr = _point_var_array(phis, qs, nvars)
        ev = eval_batch(E, arr, d)
        fv = eval_batch(F, arr, d)
        bad = np.nonzero((ev != 0) & (fv != 0))[0]
        violations = [
            SolutionPoint(d, pts[i][0], pts[i][1]) for i in bad[:20]
        ]
        return VerificationReport(
            check="ef-cover",
            d=d,
            points_scanned=rep.points_scanned,
            T_count=rep.T_count,
            violations=violations,
            elapsed=time.monotonic() - start,
            workers=jobs,
        )

    rng = np.random.default_rng(seed)
    phis, qs = _sample_eq11_points(d, samples, rng)
    A, b = linear_system_arrays(phis, qs, d)
    consistent = batch_consistency(A, b, d)
    arr = _point_var_array(phis, qs, nvars)
    ev = eval_batch(E, arr, d)
    fv = eval_batch(F, arr, d)
    # on consistent points, F != 0 must force E = 0 (hence E = 0 or F = 0)
    bad = np.nonzero(consistent & (fv != 0) & (ev != 0))[0]
    violations = [
        SolutionPoint(d, tuple(map(tuple, phis[i])), tuple(map(tuple, qs[i])))
        for i in bad[:20]
    ]
    return VerificationReport(
        check="ef-cover",
        d=d,
        points_scanned=samples,
        T_count=int(consistent.sum()),
        violations=violations,
        elapsed=time.monotonic() - start,
        workers=1,
    )


_POINT_CACHE = {}


def t_point_list(mod: Modulus, jobs: int = 1):
    """The full list of T-points at d = 3 (cached per process)."""
    d = mod.d
    if d not in _POINT_CACHE:
        pts = []
        enumerate_T(mod, emit=pts.append, jobs=jobs)
        _POINT_CACHE[d] = pts
    return _POINT_CACHE[d]


def complete_point(pt: SolutionPoint, rng) -> SolutionPoint:
    """Attach a uniformly random consistent p-assignment to a projection."""
    mod = Modulus(pt.d)
    d = pt.d
    A, b = linear_system_arrays(
        np.asarray(pt.phis)[None, :, :], np.asarray(pt.qs)[None, :, :], d
    )
    M = FpMatrix([[int(x) for x in row] for row in A[0]], mod)
    part = solve_affine(M, [int(x) for x in b[0]])
    if part is None:
        raise ValueError("point has no consistent p-assignment")
    _, kern = rank_and_kernel(M)
    vec = list(part)
    for bvec in kern:
        c = int(rng.integers(d))
        vec = [(v + c * x) % d for v, x in zip(vec, bvec)]
    ps = tuple((vec[2 * i], vec[2 * i + 1]) for i in range(4))
    return SolutionPoint(d, pt.phis, pt.qs, ps)


def point_to_tuple(pt: SolutionPoint, rng=None) -> ConjugateTuple:
    """Build a symbolic gate tuple from a completed point; phase exponents c
    are free parameters and are drawn at random when a generator is given."""
    if pt.ps is None:
        raise ValueError("point needs a p-part; use complete_point first")
    mod = Modulus(pt.d)
    gates = []
    for i in range(4):
        c = int(rng.integers(pt.d)) if rng is not None else 0
        gates.append(
            AlmostDiagClifford(
                c, SymMat(pt.phis[i], mod), pt.ps[i], pt.qs[i], mod
            )
        )
    return ConjugateTuple(*gates)


def scramble_tuple(t: ConjugateTuple, rng) -> ConjugateTuple:
    """Re-read a valid tuple along a random symplectic basis; the result is
    again valid but generically has a nonzero leading Phi."""
    a, a_star, b, b_star = random_symplectic_basis(t.modulus, rng)
    return ConjugateTuple(
        word(t, a), word(t, a_star), word(t, b), word(t, b_star)
    )


def sample_valid_tuples(mod: Modulus, count: int, rng, scramble: bool = True):
    """Random polyeqns-valid tuples drawn from the enumerated solution set."""
    pts = t_point_list(mod)
    out = []
    for _ in range(count):
        pt = pts[int(rng.integers(len(pts)))]
        t = point_to_tuple(complete_point(pt, rng), rng)
        if scramble:
            t = scramble_tuple(t, rng)
        out.append(t)
    return out
