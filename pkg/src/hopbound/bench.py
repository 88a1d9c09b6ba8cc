"""Timing harness for the O(hm) scaling experiments.

Every timed call runs on the calling thread with nothing else scheduled by
the harness; a warm-up call precedes the measured repetitions and its time
is discarded.
"""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Mapping

import numpy as np

from .generators import ParamPoint, gen_param_instance
from .graph import HopInstance
from .solvers import Solver

CSV_HEADER = ("instance_id", "n", "m", "h", "seed", "solver", "rep", "nanos")
DEFAULT_REPS = 5


class NondeterminismError(RuntimeError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    n: int
    m: int
    h: int
    seed: int
    solver: str
    rep: int
    nanos: int


def time_solver(
    instance: HopInstance,
    solver: Solver,
    reps: int = DEFAULT_REPS,
    solver_name: str | None = None,
    instance_id: str = "i0",
    seed: int = 0,
) -> list[BenchRecord]:
    if reps < 1:
        raise ValueError("reps must be >= 1")
    name = solver_name or getattr(solver, "__name__", "solver")
    expected = solver(instance)  # warm-up, not recorded
    records = []
    for rep in range(reps):
        start = time.perf_counter_ns()
        got = solver(instance)
        elapsed = time.perf_counter_ns() - start
        if got != expected:
            raise NondeterminismError(f"{name} returned {got} on rep {rep}, expected {expected}")
        records.append(
            BenchRecord(instance_id, instance.n, instance.m, instance.h, seed, name, rep, max(elapsed, 1))
        )
    return records


def median_times(points: Iterable[tuple[float, float]]) -> list[tuple[float, float]]:
    groups: dict[float, list[float]] = {}
    for x, t in points:
        groups.setdefault(x, []).append(t)
    return [(x, statistics.median(ts)) for x, ts in sorted(groups.items())]


def fit_slope(points: Iterable[tuple[float, float]]) -> float:
    """Least-squares slope of log(time) against log(x), using per-x medians."""
    med = median_times(points)
    if len(med) < 3:
        raise ValueError(f"need at least 3 distinct x values, got {len(med)}")
    xs = np.log([x for x, _ in med])
    ys = np.log([t for _, t in med])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def scaling_experiment(
    grid: list[ParamPoint], solvers: Mapping[str, Solver], reps: int = DEFAULT_REPS
) -> bytes:
    """Time every solver on every non-degenerate grid point; return CSV bytes.

    Rows come out grouped by point, then solver (in mapping order), then rep.
    """
    if not grid:
        raise ValueError("grid must be nonempty")
    records: list[BenchRecord] = []
    for idx, point in enumerate(grid):
        generated = gen_param_instance(point)
        if generated.instance is None:
            continue
        for name, solver in solvers.items():
            records += time_solver(generated.instance, solver, reps, name, f"p{idx}", point.seed)
    return records_to_csv(records)


def records_to_csv(records: Iterable[BenchRecord]) -> bytes:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(astuple(r) for r in records)
    return out.getvalue().encode()


def parse_csv(data: bytes | str) -> list[BenchRecord]:
    text = data.decode() if isinstance(data, bytes) else data
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    types = [f.type for f in fields(BenchRecord)]
    casts = [str if t in (str, "str") else int for t in types]
    return [BenchRecord(*(cast(x) for cast, x in zip(casts, row))) for row in reader if row]


def load_grid(data: bytes | str) -> list[ParamPoint]:
    """Grid file: one ``m nu eta seed wmax`` point per line; ``#`` starts a comment."""
    text = data.decode() if isinstance(data, bytes) else data
    grid = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields_ = line.split()
        if len(fields_) not in (3, 4, 5):
            raise ValueError(f"line {lineno}: expected 'm nu eta [seed [wmax]]'")
        try:
            m = int(fields_[0])
            nu, eta = float(fields_[1]), float(fields_[2])
            extra = [int(x) for x in fields_[3:]]
        except ValueError:
            raise ValueError(f"line {lineno}: malformed number") from None
        if not (0.5 <= nu <= 1 and 0 < eta and math.isfinite(eta)):
            raise ValueError(f"line {lineno}: need nu in [1/2, 1] and eta > 0")
        grid.append(ParamPoint(m, nu, eta, *extra))
    return grid
