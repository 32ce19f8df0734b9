import json

import pytest

from cliffordlab.cli import run


def test_usage_error_exit_code(capsys):
    assert run(["verify-main", "-d", "4"]) == 2
    assert "odd prime" in capsys.readouterr().err


def test_unknown_command_exit_code(capsys):
    assert run(["no-such-command"]) == 2
    capsys.readouterr()


def test_verify_main_writes_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run(["verify-main", "-d", "3", "--out", str(out)]) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    assert doc["schema"] == "cliffordlab/1"
    assert doc["check"] == "main-theorem"
    assert doc["violations"] == []
    assert doc["passed"] is True


def test_check_minors(capsys):
    assert run(["check-minors"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["minors"] == 28 and doc["nonzero"] == 0
    assert doc["message"] == "28 minors, all zero"


def test_derive_ef(tmp_path, capsys):
    out = tmp_path / "ef.json"
    assert run(["derive-ef", "--out", str(out)]) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    assert doc["E_terms"] == len(doc["E"])
    assert doc["F_terms"] == len(doc["F"])
    assert len(doc["vars"]) == 28


def test_sample_ef_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert run(["sample-ef", "-d", "5", "-n", "500", "--seed", "4",
                "--out", str(out1)]) == 0
    assert run(["sample-ef", "-d", "5", "-n", "500", "--seed", "4",
                "--out", str(out2)]) == 0
    capsys.readouterr()
    a = json.loads(out1.read_text())
    b = json.loads(out2.read_text())
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_teleport_demo(capsys):
    assert run(["teleport-demo", "--seed", "12"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] and len(doc["outcomes"]) == 3
    for o in doc["outcomes"]:
        assert abs(o["probability"] - 1 / 3) < 1e-9
        assert abs(o["fidelity"] - 1) < 1e-9


@pytest.fixture()
def toy_ideals(tmp_path):
    from cliffordlab.polysys import Ideal, dump_ideal
    from cliffordlab.polysys.multipoly import MultiPoly, VarTable

    t = VarTable(("x",))
    x = MultiPoly.variable(t, "x")
    one = MultiPoly.const(t, 1)
    paths = {}
    for name, ideal in [
        ("I", Ideal([x * x + x], t)),
        ("c1", Ideal([x], t)),
        ("c2", Ideal([x + one], t)),
        ("bad", Ideal([x * x], t)),
    ]:
        p = tmp_path / f"{name}.json"
        dump_ideal(ideal, p)
        paths[name] = str(p)
    return paths


def test_verify_certificate_pass(toy_ideals, capsys):
    code = run([
        "verify-certificate", "--ideal", toy_ideals["I"],
        "--components", toy_ideals["c1"], toy_ideals["c2"],
        "--primes", "3,5,7",
    ])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] and doc["domains_checked"] == ["Q", "Z3", "Z5", "Z7"]


def test_verify_certificate_fail(toy_ideals, capsys):
    code = run([
        "verify-certificate", "--ideal", toy_ideals["c1"],
        "--components", toy_ideals["bad"], "--primes", "3",
    ])
    assert code == 1
    doc = json.loads(capsys.readouterr().out)
    assert not doc["passed"] and doc["failures"]


def test_verify_certificate_missing_file(capsys):
    code = run([
        "verify-certificate", "--ideal", "/nonexistent.json",
        "--components", "/nonexistent2.json",
    ])
    assert code == 2
    assert "bad ideal input" in capsys.readouterr().err
