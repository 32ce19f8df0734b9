"""The full acceptance suite: one test per criterion, one pass/fail line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
complete, or via the ``selftest`` CLI subcommand.
"""

import time

import pytest

from cliffordlab import acceptance


def _run(number):
    num, name, fn = next(c for c in acceptance.CRITERIA if c[0] == number)
    start = time.monotonic()
    passed, detail = fn()
    elapsed = time.monotonic() - start
    res = acceptance.CriterionResult(num, name, passed, detail, elapsed)
    print(res.line())
    assert passed, res.line()


def test_criterion_01_main_theorem_d3():
    _run(1)


def test_criterion_02_system_shape():
    _run(2)


def test_criterion_03_minor_vanishing():
    _run(3)


def test_criterion_04_ef_cover():
    _run(4)


def test_criterion_05_criterion_equivalence():
    _run(5)


def test_criterion_06_oracle_agreement():
    _run(6)


def test_criterion_07_tuple_axioms():
    _run(7)


def test_criterion_08_phi1_reduction():
    _run(8)


def test_criterion_09_teleportation():
    _run(9)


def test_criterion_10_certificates():
    _run(10)


def test_criterion_11_extraneous():
    _run(11)
