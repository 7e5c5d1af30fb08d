"""CLI front end: output formats, exit codes, environment overrides."""

import csv
import io
import json

import pytest

from cuntzlab import parse_element
from cuntzlab.cli import CSV_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_apply_examples(capsys):
    code, out, _ = run(capsys, "apply", "--perm", "(1 2)", "--element", "s[1]")
    assert code == 0
    assert parse_element(out.strip(), 2) == parse_element("s[11] t[2] + s[12] t[1]", 2)
    code, out, _ = run(capsys, "apply", "--perm", "id",
                       "--element", "s[2] t[2]")
    assert code == 0 and out.strip() == "s[2] t[2]"
    code, out, _ = run(capsys, "apply", "--perm", "(1 3)",
                       "--element", "s[1] t[1]")
    assert code == 0
    assert parse_element(out.strip(), 2) == parse_element(
        "s[12] t[12] + s[21] t[21]", 2)


def test_apply_deterministic(capsys):
    outs = {run(capsys, "apply", "--perm", "(1 2 3)",
                "--element", "s[1] t[2]")[1] for _ in range(3)}
    assert len(outs) == 1


def test_apply_perm_word(capsys):
    code, out, _ = run(capsys, "apply", "--perm-word", "2134",
                       "--element", "s[1]")
    assert code == 0
    assert parse_element(out.strip(), 2) == parse_element("s[11] t[2] + s[12] t[1]", 2)


def test_entropy_json_schema(capsys):
    code, out, _ = run(capsys, "entropy", "--perm", "(2 3)", "--json",
                       "--depth", "2", "--steps", "8")
    assert code == 0
    payload = json.loads(out)
    summary = payload["summary"]
    assert summary["verdict"] == "log2"
    for report in payload["reports"]:
        assert set(report) == {"perm", "masa", "p", "counts", "increments",
                               "verdict", "estimate_nats"}
        assert report["masa"] == "standard"
        for n, c in report["counts"]:
            assert isinstance(n, int) and isinstance(c, str)


def test_entropy_ef(capsys):
    code, out, _ = run(capsys, "entropy", "--perm", "(1 2)", "--masa", "ef",
                       "--depth", "2", "--steps", "8", "--json")
    assert code == 0
    assert json.loads(out)["summary"]["verdict"] == "log2"


def test_entropy_zero(capsys):
    code, out, _ = run(capsys, "entropy", "--perm", "id", "--json",
                       "--depth", "2", "--steps", "8")
    assert code == 0
    assert json.loads(out)["summary"]["verdict"] == "zero"


def test_exit_codes(capsys):
    assert run(capsys, "apply", "--perm", "(1 2", "--element", "s[1]")[0] == 2
    assert run(capsys, "apply", "--perm", "id", "--element", "s[1] ++")[0] == 2
    assert run(capsys, "apply", "--element", "s[1]")[0] == 2
    assert run(capsys, "entropy", "--perm", "(1 3)", "--masa", "ef")[0] == 3
    assert run(capsys, "entropy", "--perm", "(2 3)", "--budget", "32")[0] == 4
    assert run(capsys, "norm", "--element", "s[1] + s[1] t[1]")[0] == 3


def test_norm(capsys):
    code, out, _ = run(capsys, "norm", "--element", "s[1] t[2] + s[2] t[1]")
    assert code == 0
    assert float(out.strip()) == pytest.approx(1.0, abs=1e-9)


def test_psi_json(capsys):
    code, out, _ = run(capsys, "psi", "--element", "s[1]", "--depth", "1",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["direction"] == "creation"
    assert payload["parts"]["1"] == [[[1.0, 0.0], [0.0, 0.0]],
                                     [[0.0, 0.0], [0.0, 0.0]]]


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "relations")
    assert code == 0
    assert "relations: pass" in out


def test_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("CUNTZLAB_DEPTH", "2")
    monkeypatch.setenv("CUNTZLAB_STEPS", "6")
    monkeypatch.setenv("CUNTZLAB_PERM", "(2 3)")
    code, out, _ = run(capsys, "entropy", "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["reports"]) == 2
    assert len(payload["reports"][0]["counts"]) == 6


def test_table1_csv(capsys):
    code, out, _ = run(capsys, "table1", "--format", "csv",
                       "--depth", "2", "--steps", "8")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_COLUMNS
    assert len(rows) == 25
    assert all(row[-1] == "match" for row in rows[1:])
    perms = [row[0] for row in rows[1:]]
    assert perms[0] == "id" and perms[-1] == "(1 4)(2 3)"
