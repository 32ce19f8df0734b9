"""End-to-end acceptance checks.

Each criterion is an independent callable returning a CriterionResult; the
``selftest`` CLI subcommand and the acceptance test suite both run the full
list and print one pass/fail line per criterion.
"""

from __future__ import annotations

import importlib.resources
import itertools
import json
import time
from dataclasses import dataclass

import numpy as np

from .enumeration import (
    ef_polynomials,
    sample_valid_tuples,
    t_point_list,
    verify_EF_cover,
    verify_extraneous_properties,
    verify_main_theorem,
)
from .gatealg import (
    AlmostDiagClifford,
    ConjugateTuple,
    PauliOp,
    SymMat,
    almost_diag_mul,
    conj_pauli_by_quad,
    phi1_reduce,
    tuple_satisfies_polyeqns,
)
from .modring import Modulus
from .polysys import (
    Ideal,
    build_linear_system,
    build_third_level_system,
    eval_batch,
    minors,
    verify_decomposition_certificate,
)
from .polysys.multipoly import MultiPoly, VarTable
from .polysys.systems import PolyMatrix
from .semicliff import is_semiclifford_direct, minors_criterion
from .statevector import (
    almost_diag_matrix,
    pauli_matrix,
    quad_clifford_matrix,
    random_diagonal_unitary,
    random_state,
    random_unitary,
    teleport,
    verify_tuple_numerically,
)

SEED = 20240811


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.elapsed:.1f}s)"


def _load_regression():
    ref = importlib.resources.files("cliffordlab") / "fixtures" / "regression.json"
    return json.loads(ref.read_text())


def criterion_1_main_theorem(jobs: int = 1) -> tuple:
    rep = verify_main_theorem(Modulus(3), jobs=jobs)
    fixture = _load_regression()
    pinned = fixture["T_count_d3"]
    ok = rep.passed and rep.T_count == pinned
    return ok, (
        f"d=3 solution count {rep.T_count} (pinned {pinned}), "
        f"{len(rep.violations)} minor violations"
    )


def criterion_2_system_shape() -> tuple:
    full = build_third_level_system(phi1_zero=False)
    reduced = build_third_level_system(phi1_zero=True)
    ok = (
        len(full) == 18
        and len(full[0].vars) == 28
        and len(reduced) == 18
        and len(reduced[0].vars) == 25
    )
    return ok, (
        f"{len(full)} generators over {len(full[0].vars)} variables "
        f"({len(reduced[0].vars)} with the leading Phi eliminated)"
    )


def criterion_3_minor_vanishing() -> tuple:
    A, _ = build_linear_system()
    ms = minors(A, 6)
    symbolic_ok = len(ms) == 28 and all(m.is_zero() for m in ms)
    rng = np.random.default_rng(SEED)
    pts = rng.integers(7, size=(1000, len(A.entries[0][0].vars)))
    numeric_ok = all(
        not np.any(eval_batch(m, pts, 7)) for m in ms
    )
    return symbolic_ok and numeric_ok, (
        f"{len(ms)} order-6 minors symbolically zero: {symbolic_ok}; "
        f"zero at 1000 random Z7 points: {numeric_ok}"
    )


def criterion_4_ef_cover(jobs: int = 1) -> tuple:
    rep3 = verify_EF_cover(Modulus(3), jobs=jobs)
    parts = [f"d=3: {rep3.T_count} points, {len(rep3.violations)} violations"]
    ok = rep3.passed
    for d in (5, 7):
        rep = verify_EF_cover(Modulus(d), samples=100_000, seed=SEED)
        ok = ok and rep.passed
        parts.append(
            f"d={d}: {rep.T_count}/100000 consistent, {len(rep.violations)} violations"
        )
    return ok, "; ".join(parts)


def criterion_5_criterion_equivalence() -> tuple:
    mod = Modulus(3)
    zero2 = (0, 0)
    zero_phi = SymMat((0, 0, 0), mod)
    checked = 0
    mismatches = 0
    phi_space = list(itertools.product(range(3), repeat=3))
    for e2, e3, e4 in itertools.product(phi_space, repeat=3):
        gates = [
            AlmostDiagClifford(0, phi, zero2, zero2, mod)
            for phi in (zero_phi, SymMat(e2, mod), SymMat(e3, mod), SymMat(e4, mod))
        ]
        t = ConjugateTuple(*gates)
        checked += 1
        if minors_criterion(t) != is_semiclifford_direct(t):
            mismatches += 1
    return mismatches == 0, (
        f"{checked} quadratic-part quadruples swept, {mismatches} disagreements"
    )


def _random_adc(mod, rng, n=2):
    d = mod.d
    k = 3 if n == 2 else 1
    return AlmostDiagClifford(
        int(rng.integers(d)),
        SymMat(tuple(int(rng.integers(d)) for _ in range(k)), mod),
        tuple(int(rng.integers(d)) for _ in range(n)),
        tuple(int(rng.integers(d)) for _ in range(n)),
        mod,
    )


def criterion_6_oracle_agreement() -> tuple:
    mod = Modulus(3)
    rng = np.random.default_rng(SEED)
    bad_mul = 0
    bad_conj = 0
    trials = 10_000
    for _ in range(trials):
        a = _random_adc(mod, rng)
        b = _random_adc(mod, rng)
        lhs = almost_diag_matrix(almost_diag_mul(a, b))
        rhs = almost_diag_matrix(a) @ almost_diag_matrix(b)
        if not np.allclose(lhs, rhs, atol=1e-10):
            bad_mul += 1
        phi = a.phi
        pauli = PauliOp(b.c, b.p, b.q, mod)
        dmat = quad_clifford_matrix(phi)
        lhs2 = pauli_matrix(conj_pauli_by_quad(phi, pauli))
        rhs2 = dmat @ pauli_matrix(pauli) @ dmat.conj().T
        if not np.allclose(lhs2, rhs2, atol=1e-10):
            bad_conj += 1
    ok = bad_mul == 0 and bad_conj == 0
    return ok, (
        f"{trials} product checks ({bad_mul} off), "
        f"{trials} conjugation checks ({bad_conj} off)"
    )


def criterion_7_tuple_axioms() -> tuple:
    mod = Modulus(3)
    rng = np.random.default_rng(SEED)
    tuples = sample_valid_tuples(mod, 1000, rng)
    bad = sum(1 for t in tuples if not verify_tuple_numerically(t))
    return bad == 0, f"1000 sampled valid tuples, {bad} failed the matrix axioms"


def criterion_8_phi1_reduction() -> tuple:
    mod = Modulus(3)
    rng = np.random.default_rng(SEED)
    tuples = sample_valid_tuples(mod, 10_000, rng)
    bad = 0
    for t in tuples:
        r = phi1_reduce(t)
        if not (r.u1.phi.is_zero() and tuple_satisfies_polyeqns(r)):
            bad += 1
    return bad == 0, f"10000 sampled tuples reduced, {bad} failures"


def criterion_9_teleportation() -> tuple:
    d = 3
    rng = np.random.default_rng(SEED)
    bad = 0
    for _ in range(100):
        D = random_diagonal_unitary(d, rng)
        C1 = random_unitary(d, rng)
        C2 = random_unitary(d, rng)
        psi = random_state(d, rng)
        target = C1 @ D @ C2 @ psi
        for m in range(d):
            state, prob = teleport(D, C1, C2, psi, m)
            fidelity = abs(np.vdot(target, state))
            if abs(fidelity - 1.0) > 1e-9 or abs(prob - 1 / d) > 1e-9:
                bad += 1
    return bad == 0, f"100 instances x 3 outcomes, {bad} failures"


def criterion_10_certificates() -> tuple:
    table = VarTable(("x",))
    x = MultiPoly.variable(table, "x")
    one = MultiPoly.const(table, 1)
    I = Ideal([x * x + x], table)
    good = verify_decomposition_certificate(
        I, [Ideal([x], table), Ideal([x + one], table)], primes=(3, 5, 7)
    )
    broken = verify_decomposition_certificate(
        Ideal([x], table), [Ideal([x * x], table)], primes=(3, 5, 7)
    )
    ok = good.passed and not broken.passed and len(broken.failures) > 0
    witness = broken.failures[0].witness if broken.failures else "none"
    return ok, (
        f"toy certificate passed={good.passed}; "
        f"broken certificate failed with witness {witness}"
    )


def criterion_11_extraneous() -> tuple:
    rep = verify_extraneous_properties(Modulus(3))
    return rep.passed, (
        f"{rep.T_count} points scanned, {len(rep.violations)} with a "
        "degenerate vanishing q-pair"
    )


CRITERIA = [
    (1, "main theorem at d=3", criterion_1_main_theorem),
    (2, "polynomial system shape", criterion_2_system_shape),
    (3, "coefficient-matrix minor vanishing", criterion_3_minor_vanishing),
    (4, "E/F cover", criterion_4_ef_cover),
    (5, "semi-Clifford criterion equivalence", criterion_5_criterion_equivalence),
    (6, "symbolic/matrix oracle agreement", criterion_6_oracle_agreement),
    (7, "conjugate-tuple axioms", criterion_7_tuple_axioms),
    (8, "leading-Phi reduction", criterion_8_phi1_reduction),
    (9, "gate teleportation", criterion_9_teleportation),
    (10, "certificate verifier", criterion_10_certificates),
    (11, "extraneous-component facts", criterion_11_extraneous),
]


def run_all(printer=print):
    results = []
    for number, name, fn in CRITERIA:
        start = time.monotonic()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        res = CriterionResult(number, name, passed, detail, time.monotonic() - start)
        results.append(res)
        if printer is not None:
            printer(res.line())
    return results
