import io
import json
import subprocess
import sys

import pytest

from ftadescent.cli import run
from ftadescent.formats import PolynomialParseError, parse_polynomial, polynomial_to_json
from ftadescent.gaussian import GaussianRational as G
from ftadescent.poly import Polynomial

Z2_PLUS_1 = '{"coeffs": [[1, 0], [0, 0], [1, 0]]}'


def test_parse_json_float():
    p = parse_polynomial(Z2_PLUS_1)
    assert not p.exact and p.coeffs == (1 + 0j, 0j, 1 + 0j)


def test_parse_json_exact_round_trip():
    p = parse_polynomial('{"coeffs": [["1/2", "-3"], ["0", "0"], ["7/3", "1/9"]]}')
    assert p.exact and p.coeffs[0] == G("1/2-3i")
    assert parse_polynomial(json.dumps(polynomial_to_json(p))) == p


def test_parse_plain_text():
    p = parse_polynomial("# z^2 + 1\n1 0\n\n0 0\n1 0\n")
    assert p.exact and p == Polynomial([1, 0, 1])
    q = parse_polynomial("1.5 0\n0 2.5e-1\n")
    assert not q.exact and q.coeffs == (1.5 + 0j, 0.25j)


@pytest.mark.parametrize("text,line,col", [
    ("1 0\n0 x\n", 2, 3),
    ("1 0\n1 2 3\n", 2, 5),
    ("1\n", 1, 2),
    ('{"coeffs": [[1, 0],\n  [2, ]]}', 2, 7),
])
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(PolynomialParseError) as info:
        parse_polynomial(text)
    assert (info.value.line, info.value.column) == (line, col)


@pytest.mark.parametrize("text", [
    '{"coef": []}', '{"coeffs": []}', '{"coeffs": [[1]]}',
    '{"coeffs": [["1/2", 0]]}', '{"coeffs": [["x", "0"]]}', "",
])
def test_parse_errors(text):
    with pytest.raises(PolynomialParseError):
        parse_polynomial(text)


def _run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_z2_plus_1(monkeypatch, capsys):
    code, out, err = _run(["solve"], Z2_PLUS_1, monkeypatch, capsys)
    assert code == 0 and err == ""
    doc = json.loads(out)
    roots = [complex(r["re"], r["im"]) for r in doc["roots"]]
    assert len(roots) == 2
    assert min(abs(z - 1j) for z in roots) < 1e-10 and min(abs(z + 1j) for z in roots) < 1e-10
    assert set(doc["roots"][0]) == {"re", "im", "residual", "multiplicity", "iterations"}
    assert doc["config"]["tol_residual"] == 1e-10


def test_solve_from_file_with_overrides(tmp_path, monkeypatch, capsys):
    f = tmp_path / "p.txt"
    f.write_text("-1 0\n0 0\n0 0\n1 0\n")
    code, out, _ = _run(["solve", "--input", str(f), "--seed", "3", "tol_residual=1e-12"],
                        "", monkeypatch, capsys)
    doc = json.loads(out)
    assert code == 0 and doc["config"]["seed"] == 3 and doc["config"]["tol_residual"] == 1e-12
    assert "trace" not in doc


def test_trace_subcommand(monkeypatch, capsys):
    code, out, _ = _run(["trace"], Z2_PLUS_1, monkeypatch, capsys)
    doc = json.loads(out)
    assert code == 0 and doc["trace"]
    steps = [s for s in doc["trace"] if s["phase"] == "search" and s["root_index"] == 1]
    assert all(s["new_value"] < s["value"] for s in doc["trace"])
    assert steps[0]["k"] == 2
    code, out2, _ = _run(["solve", "--trace"], Z2_PLUS_1, monkeypatch, capsys)
    assert out2 == out


def test_text_format(monkeypatch, capsys):
    code, out, _ = _run(["nthroot", "8", "3", "--format", "text"], "", monkeypatch, capsys)
    assert code == 0 and float(out) == pytest.approx(2.0, rel=1e-14)


def test_verify_lemma_sweep(monkeypatch, capsys):
    code, out, _ = _run(["verify-lemma", "--kmin", "2", "--kmax", "10"], "", monkeypatch, capsys)
    doc = json.loads(out)
    assert code == 0 and [d["k"] for d in doc] == [2, 4, 6, 8, 10]
    assert all(d["pass"] for d in doc)
    assert doc[0]["zeta_pow"] == ["-7/16", "3/2"]


def test_verify_lemma_parallel_keeps_order(monkeypatch, capsys):
    code, out, _ = _run(["verify-lemma", "--kmin", "2", "--kmax", "20", "--jobs", "2"],
                        "", monkeypatch, capsys)
    assert code == 0 and [d["k"] for d in json.loads(out)] == list(range(2, 21, 2))


@pytest.mark.parametrize("argv,stdin", [
    (["solve", "--no-such-flag"], ""),
    (["verify-lemma", "--kmin", "3", "--kmax", "10"], ""),
    (["verify-lemma", "--kmin", "10", "--kmax", "4"], ""),
    (["solve", "bogus_key=1"], Z2_PLUS_1),
    (["solve", "max_iters=lots"], Z2_PLUS_1),
    (["solve"], "1 0\n0 zz\n"),
    (["solve"], "5 0\n"),
    (["solve", "--input", "/nonexistent/p.json"], ""),
    (["nthroot", "-2", "3"], ""),
    ([], ""),
])
def test_usage_errors_exit_2(argv, stdin, monkeypatch, capsys):
    code, out, err = _run(argv, stdin, monkeypatch, capsys)
    assert code == 2 and out == "" and err


def test_convergence_failure_exit_1(monkeypatch, capsys):
    code, out, err = _run(["solve", "max_iters=1", "restart_attempts=1"],
                          '{"coeffs": [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[1,0]]}',
                          monkeypatch, capsys)
    assert code == 1 and out == "" and "stage 0" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ftadescent", "nthroot", "2", "2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["root"] == pytest.approx(2 ** 0.5, rel=1e-14)
