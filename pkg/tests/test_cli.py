import csv
import io
import json
import subprocess
import sys

import pytest

from antipower.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, expected", [
    (["letter", "9"], "1"),
    (["factor", "1", "9"], "011010011"),
    (["prefix", "4"], "0110"),
    (["prefix", "9"], "011010011"),
    (["complement", "6"], "1,3,9"),
    (["kappa", "3"], "3"),
    (["kappa", "1", "--lambda", "2"], "5"),
    (["gamma", "1"], "1"),
    (["gamma", "3"], "5"),
    (["big-gamma", "6"], "9"),
])
def test_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected + "\n"


def test_json_output(capsys):
    code, out, _ = run(capsys, "kappa", "185", "--json")
    assert code == 0
    assert json.loads(out) == {"input": 185, "value": 74, "witness": [9, 73]}
    _, out, _ = run(capsys, "complement", "6", "--json")
    doc = json.loads(out)
    assert doc["value"] == [1, 3, 9] and set(doc["witness"]) == {"1", "3", "9"}
    _, out, _ = run(capsys, "big-gamma", "6", "--json")
    assert json.loads(out)["value"] == 9


@pytest.mark.parametrize("argv", [
    ["big-gamma", "2"], ["complement", "1"], ["kappa", "4"], ["factor", "9", "1"],
    ["scan", "--stat", "gamma", "--from", "9", "--to", "3", "--out", "-"],
])
def test_domain_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_k3_message(capsys):
    _, _, err = run(capsys, "big-gamma", "2")
    assert "k must be >= 3" in err


@pytest.mark.parametrize("argv", [["letter", "0"], ["letter", "x"], ["gamma"], ["bogus"],
                                  ["scan", "--stat", "nope", "--from", "1", "--to", "2", "--out", "-"]])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_scan_csv_format(tmp_path, capsys):
    path = tmp_path / "k.csv"
    code, _, err = run(capsys, "scan", "--stat", "kappa", "--from", "1", "--to", "299", "--out", str(path))
    assert code == 0 and "150 rows" in err
    raw = path.read_bytes()
    assert b"\r" not in raw and raw.endswith(b"\n")
    lines = raw.decode("utf-8").splitlines()
    assert lines[0] == "key,value,ratio"
    assert lines[1:4] == ["1,3,3.000000", "3,3,1.000000", "5,7,1.400000"]
    assert len(lines) == 151


def test_scan_stdout_and_error_rows(capsys):
    code, out, _ = run(capsys, "scan", "--stat", "big-gamma", "--from", "1", "--to", "4", "--out", "-")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1][:2] == ["1", ""] and rows[1][2].startswith("error: DomainError")
    assert rows[3] == ["3", "3", "1.000000"]


def test_scan_no_odd_and_stride(capsys):
    _, out, _ = run(capsys, "scan", "--stat", "gamma", "--from", "1", "--to", "10", "--stride", "3", "--out", "-")
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["1", "4", "7", "10"]
    _, out, _ = run(capsys, "scan", "--stat", "kappa", "--from", "1", "--to", "4", "--no-odd", "--out", "-")
    assert len(out.splitlines()) == 5


def test_scan_threads_byte_identical(tmp_path, capsys):
    for stat, hi in [("gamma", "600"), ("big-gamma", "135"), ("kappa", "299")]:
        a, b = tmp_path / f"{stat}1.csv", tmp_path / f"{stat}8.csv"
        assert run(capsys, "scan", "--stat", stat, "--from", "3", "--to", hi, "--threads", "1", "--out", str(a))[0] == 0
        assert run(capsys, "scan", "--stat", stat, "--from", "3", "--to", hi, "--threads", "8", "--out", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()


def test_scan_unwritable_exit_1(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, err = run(capsys, "scan", "--stat", "kappa", "--from", "1", "--to", "9",
                       "--out", str(blocker / "out.csv"))
    assert code == 1 and "cannot write" in err


def test_verify_json_fields(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma1", "--json")
    assert code == 0
    reports = json.loads(out)
    assert set(reports[0]) == {"check", "swept", "passed", "failed", "first_failure", "seconds"}
    assert reports[0]["passed"] == 6 + 3 + 13 and reports[0]["failed"] == 0


def test_verify_kappa_bounds_text(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "kappa-bounds", "--max-m", "999")
    assert code == 0
    assert out.count("ok") == 4 and "FAIL" not in out


def test_verify_failure_exit_1(capsys, monkeypatch):
    from antipower import theory
    monkeypatch.setattr(theory, "check_lemma9", lambda ell: theory.Verdict(ell != 5))
    code, out, _ = run(capsys, "verify", "--suite", "lemma9")
    assert code == 1
    assert "FAIL" in out and "counterexample: 5" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "antipower", "factor", "1", "16"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "0110100110010110\n"


def test_threads_env_default(monkeypatch):
    from antipower import anti_power
    monkeypatch.setenv("ANTIPOWER_THREADS", "3")
    assert anti_power.default_threads() == 3
    monkeypatch.setenv("ANTIPOWER_THREADS", "junk")
    assert anti_power.default_threads() == 1
