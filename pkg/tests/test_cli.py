import csv
import json
import subprocess
import sys

import pytest

from cyclicmcm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "12", "7", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ulrich"] == [5, 6, 10, 11]
    assert doc["multiplicity"] == 4
    assert doc["hj"] == {"alphas": [2, 4, 2], "i_series": [12, 7, 2, 1, 0], "j_series": [0, 1, 2, 7, 12]}
    assert doc["special"] == [
        {"t": 1, "generators": [[1, 0], [0, 7]]},
        {"t": 2, "generators": [[2, 0], [0, 2]]},
        {"t": 7, "generators": [[7, 0], [0, 1]]},
    ]
    assert doc["hilbert_kunz"] == {"num": 35, "den": 12}
    assert doc["ulrich_bounds"] == {"r": 3, "lower": 3, "upper": 4, "actual": 4}
    assert [row["t"] for row in doc["per_module"]] == list(range(12))
    assert [c["m"] for c in doc["census"]] == [1, 2, 3, 4]
    assert json.loads(json.dumps(doc)) == doc


def test_analyze_text_has_dual_chain(capsys):
    code, out, _ = run(capsys, "analyze", "12", "7")
    assert code == 0
    assert "E7(-2) -- E2(-4) -- E1(-2)" in out


def test_analyze_158_57(capsys):
    code, out, _ = run(capsys, "analyze", "158", "57", "--format", "json")
    ulrich = json.loads(out)["ulrich"]
    assert code == 0 and len(ulrich) == 12 and ulrich[-1] == 157


@pytest.mark.parametrize("argv, fragment", [
    (["analyze", "12", "8"], "gcd(n,a) must be 1"),
    (["verify", "12", "9"], "gcd(n,a) must be 1"),
    (["analyze", "1", "1"], "n must be at least 2"),
    (["export", "6", "4", "quiver"], "gcd"),
])
def test_invalid_group_exit_2(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert fragment in err
    assert len(err.strip().splitlines()) == 1


def test_verify_ok(capsys):
    assert run(capsys, "verify", "12", "7")[0] == 0
    assert run(capsys, "verify", "158", "57")[0] == 0


def test_verify_failure_exit_1(capsys, monkeypatch):
    from cyclicmcm import classify

    monkeypatch.setattr(classify, "multiplicity", lambda g: 99)
    code, out, _ = run(capsys, "verify", "12", "7")
    assert code == 1
    assert "MISMATCH" in out


def test_census_small(tmp_path, capsys):
    out = tmp_path / "c.csv"
    code, *_ = run(capsys, "census", "--nmax", "2", "--out", str(out))
    assert code == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["n", "a", "r", "e", "N_ulrich", "upper_bound_hit", "lower_bound_hit",
                       "ehk_num", "ehk_den", "pass"]
    assert rows[1:] == [["2", "1", "1", "2", "1", "1", "1", "3", "2", "1"]]


def test_census_50_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "census", "--nmax", "50", "--out", str(first))[0] == 0
    assert run(capsys, "census", "--nmax", "50", "--out", str(second), "--jobs", "2")[0] == 0
    assert first.read_bytes() == second.read_bytes()
    rows = list(csv.DictReader(first.open()))
    pairs = [(int(r["n"]), int(r["a"])) for r in rows]
    assert pairs == sorted(pairs)
    assert all(r["pass"] == "1" for r in rows)
    for r in rows:
        if int(r["a"]) == int(r["n"]) - 1:
            assert int(r["N_ulrich"]) == int(r["n"]) - 1 == int(r["r"])
    assert '"' not in first.read_text()


@pytest.mark.parametrize("nmax", ["1", "10001"])
def test_census_bad_bound(capsys, nmax):
    assert run(capsys, "census", "--nmax", nmax)[0] == 2


def test_census_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "census", "--nmax", "3", "--out", str(tmp_path / "missing" / "c.csv"))
    assert code == 2 and "cannot write" in err


def test_export(tmp_path, capsys):
    q = tmp_path / "q.dot"
    assert run(capsys, "export", "12", "7", "quiver", "--out", str(q))[0] == 0
    text = q.read_text()
    assert text.count("->") == 24 and text.count('label="x"') == 12
    d = tmp_path / "d.dot"
    assert run(capsys, "export", "12", "7", "dualgraph", "--out", str(d))[0] == 0
    assert d.read_text().count("--") == 2
    q2 = tmp_path / "q2.dot"
    assert run(capsys, "export", "2", "1", "quiver", "--out", str(q2))[0] == 0
    assert q2.read_text().count("->") == 4


def test_export_unwritable(tmp_path, capsys):
    assert run(capsys, "export", "12", "7", "quiver", "--out", str(tmp_path / "no" / "q.dot"))[0] == 2


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "analyze", "twelve", "7")[0] == 2
    assert run(capsys, "export", "12", "7", "mesh")[0] == 2
    assert run(capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cyclicmcm", "verify", "12", "8"], capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "cyclicmcm", "verify", "23", "6"], capture_output=True, text=True)
    assert proc.returncode == 0
