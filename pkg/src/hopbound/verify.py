"""Seeded oracle-agreement suites behind ``hopbound verify``.

Each suite draws ``count`` random instances from a master seed and compares
the production path (Bellman-Ford, reductions, pipeline) against the naive
source-problem solvers or the independent shortest-path oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .convolution import CommonUBInstance, SequenceTriple, common_ub_check, maxplus_ub_check, normalize_instance
from .generators import gen_random_graph, rng_for
from .graph import HopInstance
from .reductions import (
    CONVOLUTION,
    ReductionArtifact,
    canonical_path,
    extract_witness,
    maxplus_ub_via_pipeline,
    path_length,
    reduce_common_to_hop,
    reduce_triangle_to_hop,
)
from .solvers import Solver, bellman_ford_solver, enumerate_paths_oracle, hop_path, minplus_power_oracle
from .triangle import TriangleInstance, find_negative_triangle


@dataclass
class SuiteReport:
    suite: str
    count: int = 0
    agree: int = 0
    yes: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.agree == self.count and not self.mismatches

    def summary(self) -> str:
        return f"{self.agree}/{self.count} agree"

    def record(self, matched: bool, detail: str):
        self.count += 1
        if matched:
            self.agree += 1
        else:
            self.mismatches.append(detail)


def _trial_seeds(seed: int, count: int) -> list[int]:
    return rng_for(seed).integers(0, 2**63 - 1, size=count, dtype=np.int64).tolist()


def random_hop_instance(seed: int, max_n=30, max_m=120, wmax=100, max_h=35) -> HopInstance:
    rng = rng_for(seed)
    n = int(rng.integers(2, max_n, endpoint=True))
    m = int(rng.integers(0, min(max_m, n * (n - 1) // 2), endpoint=True))
    g = gen_random_graph(n, m, wmax, int(rng.integers(0, 2**32))).graph
    s, t = (int(x) for x in rng.integers(0, n, size=2))
    return HopInstance(g, s, t, int(rng.integers(0, max_h, endpoint=True)))


def random_triangle(seed: int, max_P=6, max_N=8, wlim=8) -> TriangleInstance:
    # the lower end of the range varies so YES and NO instances both occur
    rng = rng_for(seed)
    P = int(rng.integers(1, max_P, endpoint=True))
    N = int(rng.integers(1, max_N, endpoint=True))
    lo = int(rng.choice([-wlim, -4, -3, -2, -1, 0]))
    draw = lambda shape: rng.integers(lo, wlim, size=shape, endpoint=True)  # noqa: E731
    return TriangleInstance(draw((P, N)), draw((N, N)), draw((N, P)))


def random_common(seed: int, max_N=8, max_M=4, wmax=20) -> CommonUBInstance:
    """Random normalized common instance with a varying bias on ``c``."""
    rng = rng_for(seed)
    N = int(rng.integers(1, max_N, endpoint=True))
    M = int(rng.integers(1, max_M, endpoint=True))
    bias = int(rng.integers(wmax // 2, 2 * wmax, endpoint=True))
    vals = rng.integers(0, wmax, size=(2 * M + 1, N), endpoint=True)
    pairs = [(vals[2 * l], vals[2 * l + 1]) for l in range(M)]
    raw = CommonUBInstance(pairs, vals[-1] + bias)
    return normalize_instance(raw)[0]


def random_triple(seed: int, max_N=24, wmax=20) -> tuple[SequenceTriple, int]:
    rng = rng_for(seed)
    N = int(rng.integers(2, max_N, endpoint=True))
    block = int(rng.choice([b for b in (2, 3, 4) if b <= N]))
    bias = int(rng.integers(wmax // 2, 5 * wmax // 2, endpoint=True))
    a, b, c = rng.integers(0, wmax, size=(3, N), endpoint=True)
    return SequenceTriple(a, b, c + bias), block


def construction_violations(artifact: ReductionArtifact, source) -> list[str]:
    """Check canonical-path hop counts/lengths and gadget weight ranges."""
    problems = []
    g = artifact.instance.graph
    lookup = g.weight_lookup()
    T = artifact.threshold
    if artifact.kind == CONVOLUTION:
        inst: CommonUBInstance = source
        W = T // 15
        N, M = inst.N, inst.M
        for l in range(1, M + 1):
            a, b = inst.pairs[l - 1]
            for i in range(N):
                for j in range(N):
                    for k in range(N):
                        path = canonical_path(artifact, (i, j, k, l))
                        if len(path) - 1 != N + 2 + i + j - k:
                            problems.append(f"hops of ({i},{j},{k},{l})")
                        if path_length(g, path, lookup) != 15 * W - a[i] - b[j] + inst.c[k]:
                            problems.append(f"length of ({i},{j},{k},{l})")
        roles = artifact.roles()
        for u, v, x in g.edges:
            if roles[u][0] != roles[v][0] and not 4 * W <= x <= 6 * W:
                problems.append(f"gadget edge ({u},{v}) weight {x} outside [4W, 6W]")
    else:
        tri: TriangleInstance = source
        P, N = tri.P, tri.N
        W = tri.W
        for i in range(P):
            for j in range(N):
                for k in range(N):
                    path = canonical_path(artifact, (i, j, k))
                    if len(path) - 1 != P + 2:
                        problems.append(f"hops of ({i},{j},{k})")
                    if path_length(g, path, lookup) != tri.weight(i, j, k) + T:
                        problems.append(f"length of ({i},{j},{k})")
        roles = artifact.roles()
        for u, v, x in g.edges:
            chain = {roles[u][0], roles[v][0]} in ({"a"}, {"abar"})
            if not chain and x < 2 * W:
                problems.append(f"gadget edge ({u},{v}) weight {x} below 2W")
    return problems


def solvers_suite(count: int, seed: int) -> SuiteReport:
    report = SuiteReport("solvers")
    bf = bellman_ford_solver()
    for trial, sub in enumerate(_trial_seeds(seed, count)):
        inst = random_hop_instance(sub)
        got = bf(inst)
        expected = [minplus_power_oracle(inst)]
        if inst.n <= 10:
            expected.append(enumerate_paths_oracle(inst))
        report.record(all(got == e for e in expected), f"trial {trial}: bf={got} oracles={expected}")
    return report


def triangle_suite(count: int, seed: int, solver: Optional[Solver] = None, identities=False) -> SuiteReport:
    report = SuiteReport("triangle")
    solver = solver or bellman_ford_solver()
    for trial, sub in enumerate(_trial_seeds(seed, count)):
        tri = random_triangle(sub)
        art = reduce_triangle_to_hop(tri)
        P, N = tri.P, tri.N
        problems = []
        if art.instance.n != 2 * P + 2 * N or art.instance.m != 2 * (P - 1) + 2 * P * N + N * N:
            problems.append("size accounting")
        expected = find_negative_triangle(tri) is not None
        answer = solver(art.instance)
        got = answer < art.threshold
        if got != expected:
            problems.append(f"decision {got} != {expected}")
        if got and expected:
            report.yes += 1
            _, path = hop_path(art.instance)
            wit = extract_witness(art, path)
            if tri.weight(wit.i, wit.j, wit.k) != wit.total or wit.total >= 0:
                problems.append(f"witness {wit}")
        if identities:
            problems += construction_violations(art, tri)
        report.record(not problems, f"trial {trial}: {problems}")
    return report


def convolution_suite(count: int, seed: int, solver: Optional[Solver] = None, identities=False) -> SuiteReport:
    report = SuiteReport("convolution")
    solver = solver or bellman_ford_solver()
    for trial, sub in enumerate(_trial_seeds(seed, count)):
        inst = random_common(sub)
        art = reduce_common_to_hop(inst)
        N, M = inst.N, inst.M
        problems = []
        if art.instance.n != 3 * N + M or art.instance.m != 3 * (N - 1) + 2 * N * M + N:
            problems.append("size accounting")
        expected = common_ub_check(inst) is not None
        answer = solver(art.instance)
        got = answer < art.threshold
        if got != expected:
            problems.append(f"decision {got} != {expected}")
        if got and expected:
            report.yes += 1
            _, path = hop_path(art.instance)
            q = extract_witness(art, path)
            a, b = inst.pairs[q.l - 1]
            if not (q.i + q.j <= q.k and inst.c[q.k] < a[q.i] + b[q.j]):
                problems.append(f"witness {q}")
        if identities:
            problems += construction_violations(art, inst)
        report.record(not problems, f"trial {trial}: {problems}")
    return report


def pipeline_suite(count: int, seed: int, solver: Optional[Solver] = None) -> SuiteReport:
    report = SuiteReport("pipeline")
    for trial, sub in enumerate(_trial_seeds(seed, count)):
        triple, block = random_triple(sub)
        expected = maxplus_ub_check(triple) is not None
        got = maxplus_ub_via_pipeline(triple, block, solver)
        report.yes += expected
        report.record(got == expected, f"trial {trial} (N={triple.N}, B={block}): {got} != {expected}")
    return report


SUITES: dict[str, Callable[[int, int], SuiteReport]] = {
    "solvers": solvers_suite,
    "triangle": triangle_suite,
    "convolution": convolution_suite,
    "pipeline": pipeline_suite,
}
