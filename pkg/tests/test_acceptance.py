"""Acceptance criteria, one test each, at the stated tolerances.

Each test prints one ``criterion N: PASS|FAIL ...`` line; the lines are
collected again in the terminal summary.
"""

import time

import numpy as np
import pytest

from hopbound import kernels
from hopbound.bench import fit_slope, time_solver
from hopbound.convolution import (
    CommonUBInstance,
    SequenceTriple,
    common_ub_check,
    maxplus_ub_check,
    normalize_instance,
    split_into_common,
)
from hopbound.generators import gen_random_graph, rng_for
from hopbound.graph import HopInstance
from hopbound.reductions import (
    decide_common_via_hop,
    decide_triangle_via_hop,
    extract_witness,
    maxplus_ub_via_pipeline,
    reduce_common_to_hop,
    reduce_triangle_to_hop,
)
from hopbound.solvers import bellman_ford_hops, bellman_ford_solver, enumerate_paths_oracle, hop_path, minplus_power_oracle
from hopbound.triangle import TriangleInstance, find_negative_triangle, partition_triangle
from hopbound.verify import _trial_seeds, construction_violations, random_common, random_hop_instance, random_triangle, random_triple

from .conftest import ACCEPTANCE_LINES

SEED = 20240601
TRIANGLE_TRIALS = 1000
CONVOLUTION_TRIALS = 1000


def report(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def test_criterion_1_solver_oracle_agreement():
    start = time.perf_counter()
    mismatches, small = [], 0
    for trial, sub in enumerate(_trial_seeds(SEED, 500)):
        inst = random_hop_instance(sub)
        assert inst.n <= 30 and inst.m <= 120 and inst.h <= 35
        got = bellman_ford_hops(inst).answer
        if got != minplus_power_oracle(inst):
            mismatches.append(trial)
        if inst.n <= 10:
            small += 1
            if got != enumerate_paths_oracle(inst):
                mismatches.append(trial)
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 10
    report(1, ok, f"500 graphs ({small} with n <= 10), {len(mismatches)} mismatches, {elapsed:.2f}s < 10s")
    assert ok, mismatches[:10]


def test_criterion_2_triangle_equivalence():
    start = time.perf_counter()
    problems, yes = [], 0
    for trial, sub in enumerate(_trial_seeds(SEED + 2, TRIANGLE_TRIALS)):
        tri = random_triangle(sub)
        P, N = tri.P, tri.N
        assert P <= 6 and N <= 8 and tri.max_abs() <= 8
        art = reduce_triangle_to_hop(tri)
        if (art.instance.n, art.instance.m) != (2 * P + 2 * N, 2 * (P - 1) + 2 * P * N + N * N):
            problems.append((trial, "size"))
        expected = find_negative_triangle(tri) is not None
        if decide_triangle_via_hop(tri) != expected:
            problems.append((trial, "decision"))
        if expected:
            yes += 1
            wit = extract_witness(art, hop_path(art.instance)[1])
            if not tri.weight(wit.i, wit.j, wit.k) == wit.total < 0:
                problems.append((trial, "witness"))
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 30
    report(2, ok, f"{TRIANGLE_TRIALS} instances ({yes} YES), {len(problems)} problems, {elapsed:.2f}s < 30s")
    assert ok, problems[:10]


def test_criterion_3_convolution_equivalence():
    start = time.perf_counter()
    problems, yes = [], 0
    for trial, sub in enumerate(_trial_seeds(SEED + 3, CONVOLUTION_TRIALS)):
        inst = random_common(sub)
        N, M = inst.N, inst.M
        assert N <= 8 and M <= 4
        art = reduce_common_to_hop(inst)
        if (art.instance.n, art.instance.m) != (3 * N + M, 3 * (N - 1) + 2 * N * M + N):
            problems.append((trial, "size"))
        expected = common_ub_check(inst) is not None
        yes += expected
        if decide_common_via_hop(inst) != expected:
            problems.append((trial, "decision"))
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 30
    report(3, ok, f"{CONVOLUTION_TRIALS} instances ({yes} YES), {len(problems)} problems, {elapsed:.2f}s < 30s")
    assert ok, problems[:10]


def test_criterion_4_pipeline():
    start = time.perf_counter()
    mismatches, yes = [], 0
    for trial, sub in enumerate(_trial_seeds(SEED + 4, 300)):
        triple, block = random_triple(sub)
        assert triple.N <= 24 and block in (2, 3, 4)
        expected = maxplus_ub_check(triple) is not None
        yes += expected
        if maxplus_ub_via_pipeline(triple, block) != expected:
            mismatches.append(trial)
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    report(4, ok, f"300 triples ({yes} YES), {len(mismatches)} mismatches, {elapsed:.2f}s < 60s")
    assert ok, mismatches[:10]


def test_criterion_5_construction_identities():
    problems, tuples = [], 0
    for sub in _trial_seeds(SEED + 2, TRIANGLE_TRIALS):
        tri = random_triangle(sub)
        problems += construction_violations(reduce_triangle_to_hop(tri), tri)
        tuples += tri.P * tri.N * tri.N
    for sub in _trial_seeds(SEED + 3, CONVOLUTION_TRIALS):
        inst = random_common(sub)
        problems += construction_violations(reduce_common_to_hop(inst), inst)
        tuples += inst.M * inst.N**3
    ok = not problems
    report(5, ok, f"{tuples} index tuples over {TRIANGLE_TRIALS + CONVOLUTION_TRIALS} instances, {len(problems)} violations")
    assert ok, problems[:10]


def _normalization_violations(raw: CommonUBInstance) -> list[str]:
    inst, _ = normalize_instance(raw)
    bad = []
    for seq in [x for pair in inst.pairs for x in pair] + [inst.c]:
        if min(seq) < 0:
            bad.append("negative value")
        if any(p >= q for p, q in zip(seq, seq[1:])):
            bad.append("not strictly increasing")
    N = inst.N
    for (a, b), (a2, b2) in zip(raw.pairs, inst.pairs):
        for i in range(N):
            for j in range(N - i):
                k = i + j
                if np.sign(raw.c[k] - a[i] - b[j]) != np.sign(inst.c[k] - a2[i] - b2[j]):
                    bad.append(f"sign flip at ({i}, {j}, {k})")
    return bad


def _split_violations(triple: SequenceTriple, block: int) -> list[str]:
    bad = []
    direct = maxplus_ub_check(triple)
    hits = []
    for common, bmap in split_into_common(triple, block):
        q = common_ub_check(common)
        if q is None:
            continue
        if bmap.is_padding(q):
            bad.append(f"padding violation {q}")
            continue
        i, j, k = bmap.to_global(q)
        hits.append((i, j, k))
        if not (i + j == k and triple.c[k] < triple.a[i] + triple.b[j]):
            bad.append(f"group witness {q} maps to non-violation {(i, j, k)}")
    if (direct is not None) != bool(hits):
        bad.append(f"OR mismatch: direct {direct}, groups {hits}")
    return bad


def test_criterion_6_normalization_and_splitting():
    problems = []
    seeds = _trial_seeds(SEED + 6, 1000)
    for sub in seeds:
        rng = rng_for(sub)
        N, M = (int(x) for x in rng.integers(1, [9, 5], endpoint=True))
        vals = rng.integers(-20, 20, size=(2 * M + 1, N), endpoint=True)
        raw = CommonUBInstance([(vals[2 * l], vals[2 * l + 1]) for l in range(M)], vals[-1])
        problems += _normalization_violations(raw)
    for sub in seeds:
        rng = rng_for(sub + 1)
        tri = random_triangle(sub)
        size = int(rng.integers(1, tri.P, endpoint=True))
        whole = find_negative_triangle(tri) is not None
        if any(find_negative_triangle(p) is not None for p in partition_triangle(tri, size)) != whole:
            problems.append("partition OR mismatch")
    for sub in seeds:
        triple, block = random_triple(sub)
        problems += _split_violations(triple, block)
    ok = not problems
    report(6, ok, f"1000 normalizations, 1000 partitions, 1000 splits, {len(problems)} violations")
    assert ok, problems[:10]


SCALING_N = 10_000


def _median_seconds(instance: HopInstance, solver) -> float:
    records = time_solver(instance, solver, reps=5)
    return float(np.median([r.nanos for r in records])) / 1e9


@pytest.mark.slow
def test_criterion_7_scaling():
    start = time.perf_counter()
    solver = bellman_ford_solver()
    base = gen_random_graph(SCALING_N, 200_000, 100, SEED).graph
    by_h = [(h, _median_seconds(HopInstance(base, 0, 1, h), solver)) for h in (128, 256, 512, 1024)]
    by_m = []
    for m in (50_000, 100_000, 200_000, 400_000):
        g = base if m == 200_000 else gen_random_graph(SCALING_N, m, 100, SEED).graph
        by_m.append((m, _median_seconds(HopInstance(g, 0, 1, 256), solver)))
    slope_h, slope_m = fit_slope(by_h), fit_slope(by_m)
    elapsed = time.perf_counter() - start
    ok = 0.8 <= slope_h <= 1.2 and 0.8 <= slope_m <= 1.25 and elapsed < 180
    fmt = lambda pts: ", ".join(f"{x}:{t * 1e3:.1f}ms" for x, t in pts)  # noqa: E731
    report(
        7,
        ok,
        f"[{kernels.BACKEND}] slope in h {slope_h:.3f} (0.8..1.2), slope in m {slope_m:.3f} (0.8..1.25), "
        f"{elapsed:.1f}s < 180s; h sweep {fmt(by_h)}; m sweep {fmt(by_m)}",
    )
    assert ok
