import csv
import hashlib
import io
import json

import pytest

from hermoments import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_moments_example(capsys):
    assert run(capsys, "moments", "--k", "3", "--route", "akl") == (0, "5,-22,32,-15,0\n", "")


def test_paths_count_example(capsys):
    assert run(capsys, "paths", "--k", "3", "--count-only")[:2] == (0, "5\n")


def test_hermite_zero_example(capsys):
    assert run(capsys, "hermite", "--n", "0")[:2] == (0, "1\n")


def test_hermite_table_formats(capsys):
    code, out, _ = run(capsys, "hermite", "--n", "4", "--format", "csv")
    assert code == 0
    assert list(csv.reader(io.StringIO(out))) == [["k", "coefficient"], ["0", "1"], ["1", "0"], ["2", "-6"], ["3", "0"], ["4", "3"]]
    code, out, _ = run(capsys, "hermite", "--n", "2", "--format", "json")
    assert json.loads(out)["coefficients"] == [{"k": 0, "a": "1"}, {"k": 1, "a": "0"}, {"k": 2, "a": "-1"}]


@pytest.mark.parametrize("route", ["interp", "det", "akl"])
def test_moments_routes_and_eval(capsys, route):
    code, out, _ = run(capsys, "moments", "--k", "2", "--route", route, "--eval-n", "4", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["coefficients"] == ["2", "-5", "3", "0"]
    assert rec["value"] == "60" and rec["newton_match"]
    assert rec["leading_match"] and rec["second_match"]


def test_moments_big_integers_are_strings(capsys):
    _, out, _ = run(capsys, "moments", "--k", "20", "--format", "json")
    rec = json.loads(out)
    assert rec["catalan"] == "6564120420"
    assert rec["s_k"] == "-480832549478"


def test_akl(capsys):
    assert run(capsys, "akl", "--k", "2", "--l", "1")[1] == "2,-5,3,0\n"


def test_paths_listing(capsys):
    code, out, _ = run(capsys, "paths", "--k", "2", "--weights", "--format", "json")
    rec = json.loads(out)
    assert rec["count"] == 2
    assert rec["A_k1"] == ["2", "-5", "3", "0"]
    code, out, _ = run(capsys, "paths", "--k", "2")
    assert out == "(0,0)->(1,0)->(2,0)\n(0,0)->(1,1)->(2,0)\n"


def test_gf_check(capsys):
    code, out, _ = run(capsys, "gf-check", "--n-max", "5", "--grid", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 15
    assert all(r["bound_pass"] == "True" and r["residual_zero"] == "True" for r in rows)
    assert rows[0]["z"] == "1/9"


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "--n", "2", "--moments", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [float(r["value"]) for r in rows if r["quantity"] == "root"] == pytest.approx([-1.0, 1.0])
    moment2 = [r for r in rows if r["quantity"] == "scaled_moment" and r["index"] == "2"][0]
    assert float(moment2["value"]) == pytest.approx(0.125)


def test_wigner_mc(capsys):
    code, out, _ = run(capsys, "wigner-mc", "--n", "3", "--samples", "2000", "--hist", "6")
    rec = json.loads(out)
    assert code == 0
    assert [r["k"] for r in rec["coefficients"]] == [0, 1, 2, 3]
    assert rec["coefficients"][2]["target"] == -3
    assert len(rec["histogram"]) == 6


def test_verify_all_quick(capsys):
    code, out, _ = run(capsys, "verify-all", "--quick")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11 and all(line.startswith("PASS") for line in lines)


def test_verify_all_reports_failure(capsys, monkeypatch):
    monkeypatch.setattr(cli.checks, "CHECKS", [("broken", lambda quick: (False, "forced"))])
    code, out, err = run(capsys, "verify-all", "--quick")
    assert code == 1
    assert out.startswith("FAIL")
    assert json.loads(err)["error"] == "ConsistencyError"


@pytest.mark.parametrize(
    "argv",
    [[], ["nope"], ["hermite"], ["hermite", "--n", "-1"], ["moments", "--k", "2", "--route", "x"], ["akl", "--k", "1", "--l", "0"]],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in json.loads(err)


def test_domain_failure_exits_1(capsys, monkeypatch):
    def boom(args):
        raise cli.NumericalError("no convergence", sweeps=3)

    monkeypatch.setattr(cli, "cmd_roots", boom)
    code, _, err = run(capsys, "roots", "--n", "3")
    rec = json.loads(err)
    assert code == 1 and rec["error"] == "NumericalError" and rec["sweeps"] == 3


def test_byte_determinism(capsys):
    for argv in (["wigner-mc", "--n", "3", "--samples", "500", "--dist", "gaussian"], ["gf-check", "--n-max", "4"], ["roots", "--n", "7"]):
        first = run(capsys, *argv)[1]
        assert run(capsys, *argv)[1] == first


def test_out_writes_manifest(tmp_path, capsys):
    target = tmp_path / "m.json"
    code, out, _ = run(capsys, "moments", "--k", "3", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    manifest = json.loads((tmp_path / "m.json.manifest.json").read_text())
    assert manifest["subcommand"] == "moments"
    assert manifest["parameters"]["k"] == 3
    assert manifest["sha256"] == hashlib.sha256(text.encode()).hexdigest()


def test_threads_from_environment(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv(cli.THREADS_ENV, "3")
    target = tmp_path / "w.json"
    run(capsys, "wigner-mc", "--n", "2", "--samples", "50", "--out", str(target))
    manifest = json.loads((tmp_path / "w.json.manifest.json").read_text())
    assert manifest["parameters"]["threads"] == 3
    assert manifest["seed"] == 20_160_321
    monkeypatch.setenv(cli.THREADS_ENV, "many")
    assert run(capsys, "hermite", "--n", "1")[0] == 2
