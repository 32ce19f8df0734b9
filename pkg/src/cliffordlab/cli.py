"""Command-line frontend: verification runs with machine-readable reports.

Every report is JSON tagged with ``"schema": "cliffordlab/1"``.  Exit codes:
0 on pass, 1 when a verification found violations, 2 on usage or input
errors.  All randomness flows from one 64-bit seed through numpy's PCG64
generator, so identical invocations produce identical reports apart from
timing fields.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import acceptance
from .enumeration import ef_polynomials, verify_EF_cover, verify_main_theorem
from .modring import Modulus, is_prime
from .polysys import (
    build_linear_system,
    load_ideal,
    minors,
    verify_decomposition_certificate,
)
from .polysys.jsonio import poly_to_obj
from .statevector import (
    random_diagonal_unitary,
    random_state,
    random_unitary,
    teleport,
)

SCHEMA = "cliffordlab/1"


class UsageError(Exception):
    pass


def _emit(report: dict, out_path):
    report = {"schema": SCHEMA, **report}
    text = json.dumps(report, indent=1)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _parse_modulus(d: int) -> Modulus:
    if not is_prime(d) or d == 2:
        raise UsageError(f"d must be an odd prime, got {d}")
    return Modulus(d)


def _cmd_verify_main(args):
    mod = _parse_modulus(args.d)
    rep = verify_main_theorem(mod, jobs=args.jobs, allow_large=args.allow_large)
    _emit(rep.to_json(), args.out)
    return 0 if rep.passed else 1


def _cmd_derive_ef(args):
    E, F = ef_polynomials()
    doc = {
        "check": "derive-ef",
        "vars": list(E.vars.names),
        "E": poly_to_obj(E),
        "F": poly_to_obj(F),
        "E_terms": len(E.terms),
        "F_terms": len(F.terms),
    }
    _emit(doc, args.out)
    return 0


def _cmd_check_minors(args):
    A, _ = build_linear_system()
    ms = minors(A, 6)
    nonzero = sum(1 for m in ms if not m.is_zero())
    doc = {
        "check": "check-minors",
        "order": 6,
        "minors": len(ms),
        "nonzero": nonzero,
        "message": f"{len(ms)} minors, all zero" if nonzero == 0
        else f"{nonzero} of {len(ms)} minors nonzero",
    }
    _emit(doc, args.out)
    return 0 if nonzero == 0 else 1


def _cmd_sample_ef(args):
    mod = _parse_modulus(args.d)
    rep = verify_EF_cover(mod, samples=args.n, seed=args.seed)
    doc = rep.to_json()
    doc["seed"] = args.seed
    _emit(doc, args.out)
    return 0 if rep.passed else 1


def _cmd_verify_certificate(args):
    try:
        ideal = load_ideal(args.ideal)
        components = [load_ideal(p) for p in args.components]
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"bad ideal input: {exc}") from exc
    primes = tuple(int(p) for p in args.primes.split(","))
    rep = verify_decomposition_certificate(
        ideal, components, primes=primes, exact_cofactors=args.exact_cofactors
    )
    doc = {"check": "verify-certificate", **rep.to_json()}
    _emit(doc, args.out)
    return 0 if rep.passed else 1


def _cmd_teleport_demo(args):
    d = 3
    rng = np.random.default_rng(args.seed)
    D = random_diagonal_unitary(d, rng)
    C1 = random_unitary(d, rng)
    C2 = random_unitary(d, rng)
    psi = random_state(d, rng)
    target = C1 @ D @ C2 @ psi
    outcomes = []
    ok = True
    for m in range(d):
        state, prob = teleport(D, C1, C2, psi, m)
        fidelity = float(abs(np.vdot(target, state)))
        outcomes.append(
            {"outcome": m, "probability": round(prob, 12),
             "fidelity": round(fidelity, 12)}
        )
        if abs(fidelity - 1.0) > 1e-9 or abs(prob - 1 / d) > 1e-9:
            ok = False
    doc = {
        "check": "teleport-demo",
        "d": d,
        "seed": args.seed,
        "outcomes": outcomes,
        "passed": ok,
    }
    _emit(doc, args.out)
    return 0 if ok else 1


def _cmd_selftest(args):
    results = acceptance.run_all()
    doc = {
        "check": "selftest",
        "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed,
             "detail": r.detail}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    if args.out:
        _emit(doc, args.out)
    return 0 if doc["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffordlab",
        description="Verification suite for third-level qudit gate structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-main", help="enumerate solutions and check the minors")
    p.add_argument("-d", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify_main)

    p = sub.add_parser("derive-ef", help="symbolically eliminate the linear system")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_derive_ef)

    p = sub.add_parser("check-minors", help="order-6 minors of the coefficient matrix")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_check_minors)

    p = sub.add_parser("sample-ef", help="sampled E/F cover check")
    p.add_argument("-d", type=int, default=7)
    p.add_argument("-n", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_sample_ef)

    p = sub.add_parser("verify-certificate", help="check an ideal decomposition")
    p.add_argument("--ideal", required=True)
    p.add_argument("--components", nargs="+", required=True)
    p.add_argument("--primes", default="3,5,7,11,13")
    p.add_argument("--exact-cofactors", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify_certificate)

    p = sub.add_parser("teleport-demo", help="simulate the teleportation circuit")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_teleport_demo)

    p = sub.add_parser("selftest", help="run the full acceptance suite")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
