import json

import pytest

from hermsig.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_signature(capsys):
    code, out, _ = run(capsys, "signature", "|z1|^2 + |z2|^2 - |z3|^2")
    assert code == 0 and "(2, 1)" in out


@pytest.mark.parametrize("where", ["before", "after"])
def test_json_flag_position(capsys, where):
    args = ["inertia", "1 + |z1|^2", "--degree", "2", "--vars", "2"]
    argv = ["--json", *args] if where == "before" else [*args, "--json"]
    code, out, _ = run(capsys, *argv)
    doc = json.loads(out)
    assert code == 0
    assert doc["inertia"] == [2, 0, 1]
    assert doc["witness_verified"] is True


def test_product(capsys):
    code, out, _ = run(capsys, "product", "|z1|^2 - |z2|^2", "|z1|^2 + |z2|^2")
    assert code == 0 and "s(product) = (1, 1)" in out


def test_divide_r(capsys):
    code, out, _ = run(capsys, "--json", "divide-r", "|z1|^4 - |z1|^2*|z2|^2")
    doc = json.loads(out)
    assert code == 0 and doc["member"] is True


def test_projdeg(capsys):
    code, out, _ = run(capsys, "projdeg", "|z1|^2*(|z1|^2 + |z2|^2 - |z3|^2)")
    assert code == 0 and "D = 2" in out


def test_construct_whitney_json(capsys):
    code, out, _ = run(capsys, "construct", "whitney", "2", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["signature"] == [3, 1] and doc["status"] == "verified"


def test_construct_thm82_with_boost(capsys):
    code, out, _ = run(capsys, "construct", "thm82", "2", "4", "4", "--boost", "1")
    assert code == 0 and "verified" in out.splitlines()[0]


def test_refusals_exit_two(capsys):
    code, out, err = run(capsys, "construct", "thm41", "1", "0")
    assert code == 2 and "refused" in (out + err)
    code, out, err = run(capsys, "construct", "target", "3", "4")
    assert code == 2
    code, out, err = run(capsys, "bound", "--n", "1", "--target", "4")
    assert code == 2


def test_parse_error_exit_two(capsys):
    code, out, err = run(capsys, "signature", "z1 +")
    assert code == 2 and "position 4" in (out + err)


def test_missing_parameters(capsys):
    code, out, err = run(capsys, "--json", "construct", "thm41")
    assert code == 2
    assert json.loads(out)["status"] == "error"


def test_bound_and_table(capsys):
    code, out, _ = run(capsys, "bound", "--n", "2", "--target", "5")
    assert code == 0 and out.strip() == "10"
    code, out, _ = run(capsys, "table", "--n", "2")
    assert code == 0
    assert out.splitlines()[0].startswith("  5 |")


def test_verify_paper_suite(capsys):
    code, out, _ = run(capsys, "verify-paper", "--suite", "s6")
    assert code == 0 and "0 failed" in out
    code, out, _ = run(capsys, "--json", "verify-paper", "--suite", "s6")
    doc = json.loads(out)
    assert code == 0
    assert doc["status"] == "verified" and doc["certificates"] == 5 and doc["failed_claims"] == 0


def test_single_failure_flips_exit_code(capsys, monkeypatch):
    from hermsig import suites
    from hermsig.constructions import whitney

    def broken():
        cert = whitney(2)
        cert.claims[0].expected = False
        return [whitney(1), cert]

    monkeypatch.setitem(suites.SUITES, "s6", broken)
    code, out, _ = run(capsys, "--json", "verify-paper", "--suite", "s6")
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "failed" and doc["failed_claims"] == 1
    assert doc["failures"][0]["claims"][0]["expected"] is False


def test_json_is_byte_stable(capsys):
    _, first, _ = run(capsys, "--json", "construct", "thm82", "3", "18", "14")
    _, second, _ = run(capsys, "--json", "construct", "thm82", "3", "18", "14")
    assert first == second


def test_table_json_grid(capsys):
    code, out, _ = run(capsys, "--json", "table", "--n", "2")
    doc = json.loads(out)
    assert code == 0 and len(doc["grid"]) == 6 and all(len(row) == 7 for row in doc["grid"])
    assert doc["grid"][-1][0] == "0" and doc["grid"][0][-1] == "..."


def test_parallel_and_serial_runs_agree():
    from hermsig.suites import run_suite

    par = run_suite("all", jobs=2)
    ser = run_suite("all", jobs=1)
    assert [c.to_json() for c in par] == [c.to_json() for c in ser]
    assert all(c.status == "verified" for c in par)
