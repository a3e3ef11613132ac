import json
import math
import subprocess
import sys

import pytest

from specbound import scan
from specbound.cli import main
from specbound.fixtures import A1, A3
from specbound.graphs import format_edge_list, star, wheel
from specbound.matrix import format_matrix, parse_matrix
from specbound.report import BoundReport, render_json


def run(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "specbound", *args], input=stdin,
                          capture_output=True, text=True, timeout=120)


@pytest.fixture
def a1_file(tmp_path):
    p = tmp_path / "a1.txt"
    p.write_text(format_matrix(A1))
    return p


def test_matrix_report(a1_file):
    out = run("matrix", str(a1_file))
    assert out.returncode == 0, out.stderr
    d = json.loads(out.stdout)
    assert d["rho"] == pytest.approx(2 + math.sqrt(7), rel=1e-11)
    assert d["psi"] == pytest.approx(2 + math.sqrt(7), rel=1e-11)
    assert d["best_l"] == 3
    assert d["phi"][1] == pytest.approx(4.7647, abs=1e-4)
    assert d["lower_certificate"]["verdict"] is True
    assert d["flags"]["reducible"] is False


def test_order_one_from_stdin():
    out = run("matrix", "-", stdin="1\n7\n")
    assert out.returncode == 0, out.stderr
    d = json.loads(out.stdout)
    assert d["rho"] == 7 and d["psi"] == 7 and d["phi"] == [7]
    assert d["flags"]["order_one"] is True


def test_duan_lower_on_a3():
    out = run("matrix", "-", stdin=format_matrix(A3))
    assert json.loads(out.stdout)["duan_psi"] == pytest.approx(6.3665, abs=1e-4)


def test_csv_output(a1_file):
    out = run("matrix", str(a1_file), "--csv")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[0] == "field,index,value"
    assert "phi,2,4.76465004569" in lines
    assert "best_l,,3" in lines


def test_bad_matrix_file(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("2\n1 1\n1 -3\n")
    out = run("matrix", str(p))
    assert out.returncode == 2
    assert "line 3" in out.stderr and "column 3" in out.stderr


def test_missing_file():
    assert run("matrix", "/nonexistent/file").returncode == 2


def test_bad_tolerance(a1_file):
    assert run("matrix", str(a1_file), "--tol", "0").returncode == 2


def test_disconnected_graph_distance(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("4 2\n1 2\n3 4\n")
    out = run("graph", str(p), "--kind", "distance")
    assert out.returncode == 2
    assert "disconnected" in out.stderr


def test_no_convergence(a1_file):
    out = run("matrix", str(a1_file), "--max-iters", "2")
    assert out.returncode == 3


def test_paper_examples_exit_code():
    out = run("paper-examples")
    assert out.returncode == 1
    assert "first mismatch" in out.stderr
    assert out.stdout.count("FAIL") == 4


def test_scan_is_deterministic():
    args = ["scan", "--count", "50", "--seed", "7", "--n-min", "3", "--n-max", "7", "--density", "0.4"]
    a, b = run(*args), run(*args)
    assert a.returncode == 0, a.stderr
    assert a.stdout == b.stdout
    csv_part, summary = a.stdout.split("\n\n")
    assert csv_part.splitlines()[0] == ",".join(scan.CSV_COLUMNS)
    assert len(csv_part.splitlines()) == 51
    s = json.loads(summary)
    assert sum(s["upper_wins"].values()) == 50
    assert s["max_violation"] <= 1e-8


def test_scan_graph_family():
    out = run("scan", "--count", "20", "--seed", "3", "--n-min", "4", "--n-max", "8",
              "--density", "0.5", "--family", "graph", "--kind", "distance")
    assert out.returncode == 0, out.stderr
    assert json.loads(out.stdout.split("\n\n")[1])["kind"] == "distance"


def test_scan_violation_writes_reproducer(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(scan, "VIOLATION_TOL", -1.0)
    code = main(["scan", "--count", "5", "--seed", "11", "--n-min", "3", "--n-max", "5",
                 "--density", "0.5", "--dump-dir", str(tmp_path)])
    assert code == 4
    dump = tmp_path / "specbound-violation-11-0.txt"
    A = parse_matrix(dump.read_text())
    assert 3 <= A.n <= 5
    assert "reproducer" in capsys.readouterr().err


def test_graph_star_distance_lower(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text(format_edge_list(star(4)))
    out = run("graph", str(p), "--kind", "distance", "--direction", "lower")
    d = json.loads(out.stdout)
    assert d["bound"] == pytest.approx(2 + math.sqrt(7), rel=1e-11)
    assert d["stated_predicate"]["holds"] is True
    assert d["stated_predicate"]["witness"] == {"vertex_value": 3, "others": [5, 5, 5]}


def test_graph_complete_adjacency(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    d = json.loads(run("graph", str(p), "--kind", "adjacency").stdout)
    assert d["bound"] == pytest.approx(3) and d["rho"] == pytest.approx(3)
    assert d["best_l"] == 1


def test_graph_wheel_signless_laplacian(tmp_path):
    p = tmp_path / "w6.txt"
    p.write_text(format_edge_list(wheel(6)))
    d = json.loads(run("graph", str(p), "--kind", "signless-laplacian").stdout)
    assert d["bound"] == pytest.approx(7.2361, abs=1e-4)
    assert d["general_certificate"]["verdict"] is True


def test_graph_non_stated_note(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text(format_edge_list(star(4)))
    d = json.loads(run("graph", str(p), "--kind", "reciprocal", "--direction", "lower").stdout)
    assert d["stated_theorem"] is False and d["note"]


def test_json_round_trip_is_fixed_point(a1_file, capsys):
    assert main(["matrix", str(a1_file)]) == 0
    first = capsys.readouterr().out
    rep = BoundReport.from_dict(json.loads(first))
    assert render_json(rep.to_dict()) == first
