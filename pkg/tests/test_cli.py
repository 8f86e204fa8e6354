import json
import subprocess
import sys

import pytest

from beatty_games.cli import main

GOOD_NEG = ["--beta", "1.99+sqrt(5)/2", "--gamma", "-0.2"]
GOOD_POS = ["--beta", "8+(1+sqrt(5))/2", "--delta", "-5*sqrt(7)/2"]
BAD_POS = ["--beta", "4.99+sqrt(5)/2", "--delta", "-1-sqrt(2)"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_exit_codes(capsys):
    code, out, _ = run(capsys, "decide", *GOOD_NEG)
    assert code == 0 and json.loads(out)["verdict"] == "GOOD"
    code, out, _ = run(capsys, "decide", *BAD_POS)
    assert code == 1
    assert json.loads(out)["certificate"]["obstruction_cell"] == [2, 6]


def test_decide_deterministic(capsys):
    first = run(capsys, "decide", *BAD_POS)[1]
    second = run(capsys, "decide", *BAD_POS)[1]
    assert first == second


def test_derive(capsys):
    code, out, _ = run(capsys, "derive", *GOOD_POS)
    rec = json.loads(out)
    assert code == 0 and rec["tuple"]["B1"] == 3 and rec["validation"]["ok"]


def test_derive_invalid(capsys):
    code, _, err = run(capsys, "decide", "--beta", "1.99+sqrt(5)/2", "--gamma", "0.9")
    assert code == 2 and "gamma_range" in err


def test_errors(capsys):
    assert run(capsys, "derive", "--beta", "2", "--gamma", "-0.2")[0] == 2
    code, _, err = run(capsys, "derive", "--beta", "1.99+sqrt(5", "--gamma", "-0.2")
    assert code == 2 and "error" in err
    assert run(capsys, "derive", "--beta", "3+sqrt(2)")[0] == 2
    with pytest.raises(SystemExit):
        main(["seq", "--beta", "3+sqrt(2)", "--gamma", "-0.1", "--length", "0"])


def test_seq_and_table_alias(capsys):
    code, out, _ = run(capsys, "seq", *GOOD_POS, "--length", "15")
    assert code == 0
    assert out.splitlines()[-1].split("\t")[:3] == ["15", "17", "137"]
    assert run(capsys, "table", *GOOD_POS, "--length", "15")[1] == out
    js = json.loads(run(capsys, "seq", *GOOD_POS, "--length", "3", "--format", "json")[1])
    assert js["B"] == [0, 3, 12, 22]


def test_word(capsys):
    _, out, _ = run(capsys, "word", *BAD_POS, "--length", "19")
    assert out.splitlines()[2].split("\t")[1:] == list("eacbaaacaaaacbaaaac")
    _, out, _ = run(capsys, "word", *BAD_POS, "--length", "4", "--format", "json")
    assert json.loads(out) == {"word": "eacb", "sign": "+"}


def test_superadd(capsys):
    code, out, _ = run(capsys, "superadd", *GOOD_POS, "--horizon", "20")
    assert code == 1 and json.loads(out)["status"] == "superadditive_only"


def test_verify(capsys, tmp_path):
    target = tmp_path / "rep.json"
    code, out, _ = run(capsys, "verify", *GOOD_NEG, "--bound", "60", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["status"] == "MATCH"
    code, out, err = run(capsys, "verify", *BAD_POS, "--bound", "40", "--format", "tsv")
    assert code == 1 and out.startswith("x\ty") and "MISMATCH" in err


def test_plot_torus(capsys):
    code, out, err = run(capsys, "plot-torus", "--beta", "3.99+sqrt(5)/2", "--gamma", "-0.2")
    assert code == 0 and out.startswith("<svg")
    assert "regions: cbaacaaaacb" in err


def test_precision_cap(capsys):
    code, _, err = run(capsys, "decide", *GOOD_POS, "--precision-bits", "8")
    assert code == 2 and "64" in err
    assert run(capsys, "decide", *GOOD_POS, "--precision-bits", "512")[0] == 0


def test_console_entry():
    res = subprocess.run([sys.executable, "-m", "beatty_games.cli", "seq", *GOOD_POS, "--length", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[-1].startswith("2\t")
