import subprocess
import sys

import pytest

from hopbound.cli import main
from hopbound.fileio import load_common, load_graph, load_triangle


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def single_edge_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("2 1\n0 1 1\n0 1 5\n")
    return path


def test_solve(capsys, single_edge_file):
    assert run(capsys, "solve", "--graph", single_edge_file) == (0, "5\n", "")


@pytest.mark.parametrize("extra", [["--oracle", "enum"], ["--oracle", "minplus-power"], ["--backend", "python"]])
def test_solve_alternatives(capsys, single_edge_file, extra):
    assert run(capsys, "solve", "--graph", single_edge_file, *extra)[:2] == (0, "5\n")


def test_solve_unreachable(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("2 0\n0 1 3\n")
    assert run(capsys, "solve", "--graph", path)[:2] == (0, "UNREACHABLE\n")


def test_verify_triangle(capsys):
    assert run(capsys, "verify", "--suite", "triangle", "--count", 1000, "--seed", 7)[:2] == (0, "1000/1000 agree\n")


@pytest.mark.parametrize("suite", ["solvers", "convolution", "pipeline"])
def test_verify_other_suites(capsys, suite):
    assert run(capsys, "verify", "--suite", suite, "--count", 30, "--seed", 1)[:2] == (0, "30/30 agree\n")


def test_reduce_then_solve(capsys, tmp_path):
    src = tmp_path / "t.txt"
    src.write_text("1 1\n-1\n-1\n-1\n")
    out = tmp_path / "red.graph"
    code, _, _ = run(capsys, "reduce", "triangle", "--in", src, "--out", out)
    assert code == 0
    assert (tmp_path / "red.graph.map").read_text().splitlines()[0] == "triangle 9"
    assert run(capsys, "solve", "--graph", out)[:2] == (0, "6\n")


def test_reduce_convolution_precondition(capsys, tmp_path):
    src = tmp_path / "c.txt"
    src.write_text("1 2\n0 0\n0 0\n0 0\n")
    code, _, err = run(capsys, "reduce", "convolution", "--in", src, "--out", tmp_path / "x")
    assert code == 2 and "strictly increasing" in err


def test_decide_exit_codes(capsys, tmp_path):
    yes, no = tmp_path / "yes.txt", tmp_path / "no.txt"
    yes.write_text("1 1\n-1\n-1\n-1\n")
    no.write_text("1 1\n1\n1\n1\n")
    assert run(capsys, "decide", "triangle", "--in", yes)[:2] == (0, "YES\n")
    assert run(capsys, "decide", "triangle", "--in", no)[:2] == (1, "NO\n")
    assert run(capsys, "decide", "triangle", "--in", yes, "--oracle", "enum")[0] == 0


def test_decide_maxplus(capsys, tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("2\n1 1\n1 1\n5 5\n")
    assert run(capsys, "decide", "maxplus", "--in", path, "--block", 1)[:2] == (1, "NO\n")
    path.write_text("2\n1 1\n1 1\n1 5\n")
    assert run(capsys, "decide", "maxplus", "--in", path)[:2] == (0, "YES\n")


def test_gen_round_trips(capsys, tmp_path):
    out = tmp_path / "g.txt"
    assert run(capsys, "gen", "graph", "--n", 10, "--m", 20, "--seed", 3, "--h", 4, "--out", out)[0] == 0
    inst = load_graph(out.read_bytes())
    assert (inst.n, inst.m, inst.h) == (10, 20, 4)
    code, text, _ = run(capsys, "gen", "triangle", "--P", 2, "--N", 3, "--seed", 1)
    assert code == 0 and load_triangle(text).P == 2


def test_normalize(capsys, tmp_path):
    src, out = tmp_path / "c.txt", tmp_path / "n.txt"
    src.write_text("1 1\n0\n0\n0\n")
    code, text, _ = run(capsys, "normalize", "--in", src, "--out", out)
    assert code == 0 and text.startswith("shift ")
    assert min(load_common(out.read_bytes()).values()) >= 0


def test_split(capsys, tmp_path):
    src = tmp_path / "s.txt"
    src.write_text("4\n1 2 3 4\n1 2 3 4\n9 9 9 9\n")
    code, text, _ = run(capsys, "split", "--in", src, "--block", 2, "--out-dir", tmp_path / "out")
    assert code == 0 and text.startswith("3 groups")
    assert sorted(p.name for p in (tmp_path / "out").iterdir())[:2] == ["group_0000.common", "group_0000.map"]


def test_bench(capsys, tmp_path):
    grid, csv = tmp_path / "grid.txt", tmp_path / "out.csv"
    grid.write_text("300 1 0.5\n")
    assert run(capsys, "bench", "--grid-file", grid, "--reps", 2, "--csv", csv, "--solver", "bellman-ford-numpy")[0] == 0
    lines = csv.read_text().splitlines()
    assert len(lines) == 3 and lines[1].split(",")[5] == "bellman-ford-numpy"


def test_bench_unknown_solver(capsys, tmp_path):
    grid = tmp_path / "grid.txt"
    grid.write_text("300 1 0.5\n")
    assert run(capsys, "bench", "--grid-file", grid, "--csv", "-", "--solver", "magic")[0] == 2


def test_usage_and_input_errors(capsys, tmp_path):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "solve", "--graph", tmp_path / "missing")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("2 1\n0 1 1\n0 7 5\n")
    code, _, err = run(capsys, "solve", "--graph", bad)
    assert code == 2 and "line 3" in err


def test_module_entry_point(single_edge_file):
    proc = subprocess.run([sys.executable, "-m", "hopbound", "solve", "--graph", str(single_edge_file)], capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "5\n")
