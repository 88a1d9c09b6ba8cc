import math

import pytest

from hopbound.bench import (
    CSV_HEADER,
    BenchRecord,
    NondeterminismError,
    fit_slope,
    load_grid,
    parse_csv,
    records_to_csv,
    scaling_experiment,
    time_solver,
)
from hopbound.generators import ParamPoint
from hopbound.solvers import bellman_ford_solver


def test_reps_and_fields(three_node):
    records = time_solver(three_node, bellman_ford_solver(), reps=3, solver_name="bf")
    assert len(records) == 3
    assert [r.rep for r in records] == [0, 1, 2]
    assert all((r.n, r.m, r.h, r.solver) == (3, 3, 2, "bf") and r.nanos > 0 for r in records)


def test_reps_must_be_positive(three_node):
    with pytest.raises(ValueError):
        time_solver(three_node, bellman_ford_solver(), reps=0)


def test_nondeterminism_detected(three_node):
    calls = iter(range(100))
    with pytest.raises(NondeterminismError):
        time_solver(three_node, lambda inst: next(calls), reps=2)


def test_slope_linear_and_constant():
    assert math.isclose(fit_slope([(x, 7 * x) for x in (1, 2, 4, 8)]), 1.0)
    assert math.isclose(fit_slope([(x, 3.0) for x in (10, 20, 40)]), 0.0, abs_tol=1e-12)


def test_slope_uses_medians():
    pts = [(x, x * f) for x in (2, 4, 8) for f in (1, 1, 1000)]
    assert math.isclose(fit_slope(pts), 1.0)


def test_slope_needs_three_points():
    with pytest.raises(ValueError):
        fit_slope([(1, 1), (2, 2), (2, 3)])


def test_experiment_rows():
    data = scaling_experiment([ParamPoint(200, 1.0, 0.5, seed=4)], {"bf": bellman_ford_solver()}, reps=2)
    lines = data.decode().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 3
    rec = parse_csv(data)
    assert [(r.instance_id, r.n, r.m, r.h, r.seed, r.rep) for r in rec] == [("p0", 200, 200, 14, 4, 0), ("p0", 200, 200, 14, 4, 1)]


def test_experiment_skips_degenerate():
    with pytest.warns(UserWarning):
        data = scaling_experiment([ParamPoint(100, 0.5, 0.75)], {"bf": bellman_ford_solver()}, reps=1)
    assert data.decode().splitlines() == [",".join(CSV_HEADER)]


def test_csv_round_trip():
    records = [BenchRecord("p0", 5, 7, 2, 1, "bf", 0, 123), BenchRecord("p1", 9, 9, 3, 0, "x", 1, 4)]
    assert parse_csv(records_to_csv(records)) == records


def test_grid_file():
    grid = load_grid("# m nu eta seed wmax\n1000 1 0.5\n\n4000 0.75 0.25 3 10  # dense\n")
    assert grid == [ParamPoint(1000, 1.0, 0.5), ParamPoint(4000, 0.75, 0.25, 3, 10)]


@pytest.mark.parametrize("text", ["1000 1\n", "1000 x 0.5\n", "1000 0.2 0.5\n", "10 1 0.5 1 2 3\n"])
def test_grid_errors(text):
    with pytest.raises(ValueError, match="line 1"):
        load_grid(text)
