import csv
import json
import subprocess
import sys

import numpy as np
import pytest

from schubertq.cli import main, parse_matrix_json
from schubertq.qh import c1_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_basis_table(capsys):
    code, out, _ = run(capsys, "basis", "--space", "og", "--n", "2")
    assert code == 0
    rows = out.strip().splitlines()[2:]
    assert [r.split()[1] for r in rows] == ["()", "(1)", "(2)", "(2,1)"]


def test_basis_json_and_csv(capsys):
    code, out, _ = run(capsys, "basis", "--space", "lg", "--n", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["payload"]["basis"] == ["", "1"]
    assert data["payload"]["dim"] == "2"
    assert set(data) == {"command", "space", "n", "payload", "tool_version"}
    code, out, _ = run(capsys, "basis", "--n", "2", "--format", "csv")
    assert out.splitlines()[0] == "index,partition,weight"
    assert len(out.splitlines()) == 5


@pytest.mark.parametrize("n", ["0", "17"])
def test_basis_bad_n(capsys, n):
    code, _, err = run(capsys, "basis", "--n", n)
    assert code == 2 and "--n" in err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--space", "lg", "--n", "2", "--k", "1", "--lambda", "2"], "sigma(2,1) + q"),
        (["--space", "og", "--n", "2", "--k", "1", "--lambda", "2,1"], "q"),
        (["--space", "og", "--n", "2", "--k", "1", "--lambda", "1"], "tau(2)"),
        (["--space", "lg", "--n", "2", "--k", "1", "--lambda", ""], "sigma(1)"),
    ],
)
def test_pieri(capsys, argv, expected):
    code, out, _ = run(capsys, "pieri", *argv)
    assert code == 0 and out.strip() == expected


def test_pieri_json_terms(capsys):
    code, out, _ = run(capsys, "pieri", "--space", "lg", "--n", "2", "--k", "1", "--lambda", "2", "--format", "json")
    terms = json.loads(out)["payload"]["terms"]
    assert terms == [
        {"partition": "2,1", "q_degree": "0", "coeff": "1"},
        {"partition": "", "q_degree": "1", "coeff": "1"},
    ]


@pytest.mark.parametrize(
    "argv",
    [
        ["--space", "og", "--n", "2", "--k", "3", "--lambda", "1"],
        ["--space", "og", "--n", "2", "--k", "1", "--lambda", "3"],
        ["--space", "og", "--n", "2", "--k", "1", "--lambda", "1,1"],
        ["--space", "og", "--n", "2", "--k", "1", "--lambda", "x"],
    ],
)
def test_pieri_usage_errors(capsys, argv):
    code, _, _ = run(capsys, "pieri", *argv)
    assert code == 2


def test_matrix_a2(capsys):
    code, out, _ = run(capsys, "matrix", "--space", "og", "--n", "2", "--format", "json")
    assert code == 0
    A2 = [[0, 0, 0, 4], [4, 0, 0, 0], [0, 4, 0, 0], [0, 0, 4, 0]]
    assert parse_matrix_json(out).tolist() == A2


@pytest.mark.parametrize("space", ["lg", "og"])
@pytest.mark.parametrize("n", [1, 3, 5])
def test_matrix_round_trip(capsys, space, n):
    _, out, _ = run(capsys, "matrix", "--space", space, "--n", str(n), "--format", "json")
    assert np.array_equal(parse_matrix_json(out), c1_matrix(space, n).entries)


def test_matrix_special_class(capsys):
    code, out, _ = run(capsys, "matrix", "--space", "lg", "--n", "2", "--k", "2", "--format", "csv")
    rows = list(csv.reader(out.splitlines()))
    assert code == 0 and rows[0] == ["row", "()", "(1)", "(2)", "(2,1)"]
    assert rows[2] == ["(1)", "0", "0", "1", "0"]


def test_spectrum_og2(capsys):
    code, out, _ = run(capsys, "spectrum", "--space", "og", "--n", "2", "--format", "json")
    data = json.loads(out)["payload"]
    assert code == 0
    assert sorted(map(tuple, data["values"])) == [(-4.0, 0.0), (0.0, -4.0), (0.0, 4.0), (4.0, 0.0)]
    assert data["delta0"] == 4.0
    assert data["max_residual"] <= 1e-8


def test_spectrum_tolerance_exit_code(capsys):
    code, _, _ = run(capsys, "spectrum", "--space", "lg", "--n", "4", "--tol", "1e-30")
    assert code == 1


def test_glbc_og(capsys):
    code, out, _ = run(capsys, "glbc", "--space", "og", "--n-max", "4", "--format", "json")
    rows = json.loads(out)["payload"]["rows"]
    assert code == 0
    got = [(r["bound"], r["delta0_closed"], r["verdict"]) for r in rows]
    assert got[0] == ("2", 2.0, "equality")
    assert got[1] == ("4", 4.0, "equality")
    assert got[2][0] == "7" and abs(got[2][1] - 7.5595) < 1e-4 and got[2][2] == "strict"
    assert got[3][0] == "11" and abs(got[3][1] - 12.43) < 5e-3 and got[3][2] == "strict"


def test_property_o_and_rietsch(capsys):
    code, out, _ = run(capsys, "property-o", "--space", "og", "--n", "2", "--format", "json")
    data = json.loads(out)["payload"]
    assert code == 0 and data["passed"] and data["fano_index"] == "4"
    code, out, _ = run(capsys, "rietsch", "--n", "4", "--format", "json")
    data = json.loads(out)["payload"]
    assert code == 0 and data["I0"] == ["-3/2", "-1/2", "1/2", "3/2"]
    assert abs(data["value"][0] - 2.61312592975) < 1e-10


@pytest.mark.parametrize(
    "argv",
    [
        ["glbc", "--space", "lg", "--n-max", "6", "--format", "csv"],
        ["spectrum", "--space", "lg", "--n", "3", "--format", "json"],
        ["matrix", "--space", "og", "--n", "3"],
    ],
)
def test_output_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_thread_env_validated(capsys, monkeypatch):
    monkeypatch.setenv("SCHUBERTQ_THREADS", "0")
    code, _, err = run(capsys, "basis", "--n", "2")
    assert code == 2 and "SCHUBERTQ_THREADS" in err
    monkeypatch.setenv("SCHUBERTQ_THREADS", "4")
    assert run(capsys, "basis", "--n", "2")[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schubertq", "pieri", "--space", "lg", "--n", "2", "--k", "1", "--lambda", "2,1"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.strip() == "sigma(1)*q"


def test_missing_space_is_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["matrix", "--n", "2"])
    assert info.value.code == 2
