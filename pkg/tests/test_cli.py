import csv
import io
import json
import subprocess
import sys

import pytest

from conftest import EXAMPLE_22, EXAMPLE_34
from chungfeller.cli import main, parse_range, parse_step_set
from chungfeller.enumeration import PRESETS
from chungfeller.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stat(capsys):
    assert run(capsys, "stat", "--path", EXAMPLE_22, "--stat", "npl")[:2] == (0, "6\n")
    assert run(capsys, "stat", "--path", EXAMPLE_22, "--stat", "rml")[1] == "7\n"
    code, out, _ = run(capsys, "stat", "--path", EXAMPLE_34, "--root-offset", "1", "--stat", "pnpl")
    assert (code, out) == (0, "3\n")
    assert run(capsys, "stat", "--path", EXAMPLE_34, "--root-offset", "1", "--stat", "prml")[1] == "3\n"


@pytest.mark.parametrize(
    "argv, code",
    [
        (["stat", "--path", "(1,1)(1,-2", "--stat", "npl"], 2),
        (["stat", "--path", EXAMPLE_34, "--stat", "pnpl"], 2),  # missing --root-offset
        (["stat", "--path", "(1,1)(1,1)", "--stat", "npl"], 3),
        (["stat", "--path", EXAMPLE_34, "--root-offset", "2", "--stat", "pnpl"], 3),
        (["stat", "--path", EXAMPLE_34, "--stat", "bogus"], 2),
        (["biject", "--path", "(1,1)(1,1)(1,-1)", "--map", "phi"], 3),
        (["theta", "--path", EXAMPLE_34, "--r", "9"], 3),
        (["histogram", "--n", "3", "--m", "3", "--statistic", "npl"], 3),
        (["histogram", "--n", "2", "--m", "3", "--statistic", "npl", "--step-set", "nope"], 2),
        (["verify", "--n", "1..x"], 2),
        (["frobnicate"], 2),
    ],
)
def test_error_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == ""
    assert err


def test_theta_matrix(capsys):
    code, out, _ = run(capsys, "theta", "--path", EXAMPLE_34)
    doc = json.loads(out)
    assert code == 0
    assert doc["order"] == [[2, 0], [3, 0], [4, 0], [4, 1], [1, 0]]
    assert doc["stat"] == [0, 1, 2, 3, 4]
    assert doc["paths"][3] == {"steps": [[1, 1], [1, -2], [1, 1], [2, 1]], "root_offset": 1}


def test_gamma_matrix(capsys):
    doc = json.loads(run(capsys, "gamma", "--path", EXAMPLE_34)[1])
    assert doc["order"] == [[2, 0], [1, 0], [4, 0], [4, 1], [3, 0]]
    assert doc["stat"] == [0, 1, 2, 3, 4]
    single = json.loads(run(capsys, "gamma", "--path", EXAMPLE_34, "--r", "2")[1])
    assert single == doc["paths"][1]


def test_biject_trace(capsys):
    code, out, _ = run(capsys, "biject", "--map", "psi", "--trace", "--path", "(1,-2)(2,1)(1,1)(1,1)")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(lines) == 4
    assert lines[-1] == {"steps": [[2, 1], [1, 1], [1, -2], [1, 1]]}


def test_biject_single(capsys):
    out = run(capsys, "biject", "--map", "phi", "--path", "(1,1)(1,1)(1,-2)(2,1)")[1]
    assert json.loads(out) == {"steps": [[1, 1], [1, 1], [2, -2], [1, 1]]}


def test_histogram_json_and_csv(capsys):
    doc = json.loads(run(capsys, "histogram", "--n", "2", "--m", "3", "--statistic", "pnpl")[1])
    assert doc["counts"] == {"0": "2", "1": "2", "2": "2"}
    assert doc["total"] == "6"
    csv_out = run(capsys, "histogram", "--n", "2", "--m", "3", "--statistic", "pnpl", "--format", "csv")[1]
    assert csv_out == "r,count\n0,2\n1,2\n2,2\n"
    doc = json.loads(run(capsys, "histogram", "--n", "2", "--m", "5", "--statistic", "prml",
                         "--step-set", "schroeder")[1])
    assert len(set(doc["counts"].values())) == 1


def test_enumerate(capsys):
    out = run(capsys, "enumerate", "--n", "2", "--m", "3")[1]
    assert len(out.splitlines()) == 6
    out = run(capsys, "enumerate", "--n", "3", "--m", "5", "--pointed")[1]
    assert len(out.splitlines()) == 100
    out = run(capsys, "enumerate", "--n", "2", "--m", "3", "--step-set", "[[1,1],[1,-1]]",
              "--format", "csv")[1]
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["steps"], ["(1,-1)(1,1)(1,1)"], ["(1,1)(1,-1)(1,1)"], ["(1,1)(1,1)(1,-1)"]]


def test_verify_pointed(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--m", "3", "--suite", "pointed")
    doc = json.loads(out)
    assert code == 0
    hist = next(c for c in doc["checks"] if c["name"] == "pnpl_histogram")
    assert hist["observed"] == {"0": "2", "1": "2", "2": "2"}
    assert doc["summary"]["failed"] == 0


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "--n", "1..2", "--m-offset", "0..2")[1]
    second = run(capsys, "verify", "--n", "1..2", "--m-offset", "0..2")[1]
    assert first == second
    assert json.loads(first)["summary"]["failed"] == 0


def test_verify_cap(capsys):
    code, out, err = run(capsys, "verify", "--n", "12", "--m", "30")
    assert (code, out) == (5, "")
    assert "cap" in err


def test_verify_reports_failures(capsys, monkeypatch):
    import chungfeller.verify as verify

    monkeypatch.setattr(verify, "count_paths", lambda n, m: -1)
    code, out, err = run(capsys, "verify", "--n", "2", "--m", "3", "--suite", "npl")
    assert code == 4
    assert json.loads(out)["summary"]["failed"] >= 1
    assert "FAILED path_count" in err


def test_sample(capsys):
    a = run(capsys, "sample", "--n", "3", "--m", "5", "--r", "2", "--seed", "11")[1]
    b = run(capsys, "sample", "--n", "3", "--m", "5", "--r", "2", "--seed", "11")[1]
    assert a == b and "root_offset" in json.loads(a)


def test_parsers():
    assert parse_range("3") == [3]
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_step_set("dyck") is PRESETS["dyck"]
    assert parse_step_set('{"A": [1], "B": [1]}').steps == PRESETS["schroeder"].steps
    assert parse_step_set(None) is None
    with pytest.raises(ParseError):
        parse_step_set("[[1]]")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chungfeller", "stat", "--path", EXAMPLE_22, "--stat", "npl"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "6\n"
