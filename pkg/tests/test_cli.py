import csv
import io
import json
import re

import pytest

from frobkit.cli import main


def _write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


@pytest.fixture
def f467(tmp_path):
    return _write(tmp_path, "f467.json", {"kind": "frobenius", "a": ["4", "6", "7"], "k": "9"})


@pytest.mark.parametrize("algorithm", ["nijenhuis", "bruteforce", "binsearch", "auto"])
def test_solve(f467, algorithm, capsys):
    assert main(["solve", f467, "--algorithm", algorithm]) == 0
    assert capsys.readouterr().out == "9\n"


@pytest.mark.parametrize("a, g", [(["3", "4"], "5"), (["6", "10", "15"], "29")])
def test_solve_more(tmp_path, a, g, capsys):
    path = _write(tmp_path, "x.json", {"kind": "frobenius", "a": a, "k": "1"})
    assert main(["solve", path]) == 0
    assert capsys.readouterr().out.strip() == g


def test_solve_auto_falls_back(f467, capsys):
    assert main(["solve", f467, "--cap-residues", "2"]) == 0
    assert capsys.readouterr().out == "9\n"
    assert main(["solve", f467, "--algorithm", "nijenhuis", "--cap-residues", "2"]) == 2


def test_decide_exit_codes(tmp_path, f467, capsys):
    assert main(["decide", f467]) == 0
    c = _write(tmp_path, "c.json", {"kind": "frobenius", "a": ["3", "4"], "k": "5"})
    assert main(["decide", c, "--problem", "cofrobenius"]) == 1
    q = _write(tmp_path, "q.json", {"kind": "assoc-ikp", "a": ["3", "6", "9"], "lambda": "11"})
    assert main(["decide", q]) == 1
    out = capsys.readouterr().out.split()
    assert out == ["yes", "no", "no"]


def test_decide_kind_mismatch(tmp_path, f467):
    assert main(["decide", f467, "--problem", "3dm"]) == 2


def test_invalid_instance_exits_2(tmp_path, capsys):
    bad = _write(tmp_path, "bad.json", {"kind": "frobenius", "a": ["4", "6", "8"], "k": "3"})
    assert main(["solve", bad]) == 2
    assert capsys.readouterr().err.startswith("frobkit: error:")
    assert main(["solve", str(tmp_path / "missing.json")]) == 2
    assert main(["nonsense"]) == 2


def test_oracle_matches_decide(tmp_path):
    for seed in range(10):
        for kind in ("frobenius", "3dm", "assoc-ikp", "pair", "knapsack"):
            path = str(tmp_path / f"{kind}-{seed}.json")
            assert main(["gen", kind, "--seed", str(seed), "--a-max", "40", "-o", path]) == 0
            assert main(["oracle", path]) == main(["decide", path])


def test_bounds_json(f467, capsys):
    assert main(["bounds", f467, "--format", "json"]) == 0
    row = json.loads(capsys.readouterr().out)
    assert row["wilf_upper"] == 49 and row["erdos_graham_upper"] == 10
    assert round(row["davison_lower"], 4) == 5.4499


def test_reduce_writes_sidecar(tmp_path):
    src = _write(tmp_path, "p.json", {"kind": "3dm", "q": 1, "m1": [], "m2": [[1, 1, 1]]})
    out = tmp_path / "img.json"
    assert main(["reduce", "3dm-to-ikp", src, "-o", str(out)]) == 0
    img = json.loads(out.read_text())
    assert img["a"] == [str(x) for x in range(8, 16)] and img["lambda"] == "8"
    cert = json.loads((tmp_path / "img.cert.json").read_text())
    assert {"base", "rep_len", "psi_size", "lambda", "case"} <= set(cert)
    assert cert["base"] == 2 and cert["lambda"] == "8"
    assert main(["decide", str(out)]) == 0

    frob = tmp_path / "frob.json"
    assert main(["reduce", "ikp-to-cofrob", str(out), "-o", str(frob)]) == 0
    assert json.loads((tmp_path / "frob.cert.json").read_text())["case"] == "valid"
    assert main(["decide", str(frob), "--problem", "cofrobenius"]) == 0
    assert main(["reduce", "ikp-to-cofrob", src, "-o", str(frob)]) == 2


def test_gen_deterministic_and_roundtrip(tmp_path, capsys):
    assert main(["gen", "3dm", "--q", "2", "--m1", "1", "--m2", "3", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "3dm", "--q", "2", "--m1", "1", "--m2", "3", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first
    path = _write(tmp_path, "g.json", json.loads(first))
    assert main(["decide", path]) in (0, 1)


def test_gen_retry_exhaustion():
    assert main(["gen", "frobenius", "--n", "3", "--a-max", "3"]) == 2


def _strip_timing(text, fmt):
    if fmt == "csv":
        # wall_time_s is the last column
        return re.sub(r",[0-9.]+$", ",T", text, flags=re.M)
    return re.sub(r"wall_time_s[\"=:, ]*[\"]?[0-9.e-]+", "wall_time_s=T", text)


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_verify_deterministic(fmt, capsys):
    argv = ["verify", "phi", "--trials", "30", "--seed", "1", "--format", fmt]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert _strip_timing(capsys.readouterr().out, fmt) == _strip_timing(first, fmt)


def test_verify_csv_rows(capsys):
    assert main(["verify", "solvers", "--trials", "12", "--seed", "3", "--a-max", "60", "--format", "csv"]) == 0
    lines = [ln for ln in capsys.readouterr().out.splitlines() if not ln.startswith("#")]
    rows = list(csv.DictReader(io.StringIO("\n".join(lines))))
    assert len(rows) == 12 and all(r["agree"] == "True" for r in rows)
    assert "wall_time_s" in rows[0]


def test_verify_psi(capsys):
    assert main(["verify", "psi", "--trials", "20", "--q-max", "2", "--seed", "42"]) == 0
    assert "agreement 20/20" in capsys.readouterr().out


def test_caps_from_env(f467, monkeypatch, capsys):
    monkeypatch.setenv("FROBKIT_CAPS", "residues=2")
    assert main(["solve", f467, "--algorithm", "nijenhuis"]) == 2
    assert main(["solve", f467, "--algorithm", "nijenhuis", "--cap-residues", "10"]) == 0
    monkeypatch.setenv("FROBKIT_CAPS", "residues=zero")
    assert main(["solve", f467]) == 2
