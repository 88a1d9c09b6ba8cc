"""Hop-bounded shortest-path solvers.

:func:`bellman_ford_hops` is the production solver.  The min-plus matrix
power and exhaustive path enumeration are independent oracles used to
cross-check it, and :func:`dijkstra_unbounded` is the no-hop-bound baseline.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import kernels
from .graph import (
    UNREACHABLE,
    Graph,
    HopInstance,
    InstanceError,
    PathLength,
    check_instance,
    validate_instance,
)

Solver = Callable[[HopInstance], PathLength]

MINPLUS_ORACLE_MAX_NODES = 512
ENUM_ORACLE_MAX_NODES = 12
ENUM_ORACLE_MAX_HOPS = 12


class OracleBudgetError(ValueError):
    """Instance is too large for an exhaustive oracle."""


class NegativeWeightError(ValueError):
    pass


def _to_lengths(row: np.ndarray) -> list[PathLength]:
    return [UNREACHABLE if x == kernels.INF else x for x in row.tolist()]


def _start_row(n: int, s: int) -> np.ndarray:
    row = np.full(n, kernels.INF, dtype=np.int64)
    row[s] = 0
    return row


class HopResult(NamedTuple):
    answer: PathLength
    final_row: list[PathLength]


def bellman_ford_hops(instance: HopInstance, backend: str | None = None) -> HopResult:
    """Shortest s-t walk with at most ``h`` edges.

    Runs exactly ``h`` relaxation rounds (rounds past ``n - 1`` are no-ops for
    nonnegative weights; pre-cap ``h`` if that matters).  Each round reads
    only the previous row and scans every edge in both directions.
    """
    check_instance(instance)
    g = instance.graph
    impl = kernels.get_backend(backend)
    row = impl.relax_rounds(g.u, g.v, g.w, _start_row(g.node_count, instance.s), instance.h)
    final = _to_lengths(row)
    return HopResult(final[instance.t], final)


@dataclass(frozen=True)
class DistanceTable:
    """Rows ``d^(0..H)``; ``rows[i][v]`` is the best walk to v with <= i edges."""

    source: int
    raw: np.ndarray

    @property
    def hops(self) -> int:
        return self.raw.shape[0] - 1

    @property
    def rows(self) -> list[list[PathLength]]:
        return [_to_lengths(r) for r in self.raw]

    def row(self, i: int) -> list[PathLength]:
        return _to_lengths(self.raw[i])

    def __getitem__(self, key):
        i, v = key
        x = int(self.raw[i, v])
        return UNREACHABLE if x == kernels.INF else x


def all_hops_table(graph: Graph, s: int, H: int, backend: str | None = None) -> DistanceTable:
    check_instance(HopInstance(graph, s, s, H))
    impl = kernels.get_backend(backend)
    raw = impl.relax_table(graph.u, graph.v, graph.w, _start_row(graph.node_count, s), H)
    raw.flags.writeable = False
    return DistanceTable(s, raw)


def hop_path(instance: HopInstance, backend: str | None = None) -> tuple[PathLength, list[int] | None]:
    """Return the optimal length and one optimal s-t walk (node list).

    The walk is recovered by backtracking through the all-hops table; every
    step lands on the round where its node first attained its value, so for
    nonnegative weights the walk is a simple path.
    """
    table = all_hops_table(instance.graph, instance.s, instance.h, backend)
    raw = table.raw
    t = instance.t
    if raw[-1, t] == kernels.INF:
        return UNREACHABLE, None
    adj: dict[int, list[tuple[int, int]]] = {}
    for a, b, x in instance.graph.edges:
        adj.setdefault(b, []).append((a, x))
        if a != b:
            adj.setdefault(a, []).append((b, x))
    walk = [t]
    i, node = instance.h, t
    while True:
        while i > 0 and raw[i, node] == raw[i - 1, node]:
            i -= 1
        if i == 0:
            break
        target = raw[i, node]
        for prev, x in adj.get(node, ()):
            if raw[i - 1, prev] != kernels.INF and raw[i - 1, prev] + x == target:
                node = prev
                break
        else:  # pragma: no cover - would mean the table is inconsistent
            raise RuntimeError("distance table has no predecessor for a strict improvement")
        i -= 1
        walk.append(node)
    walk.reverse()
    return int(raw[-1, t]), walk


def minplus_power_oracle(instance: HopInstance) -> PathLength:
    """``M^h[s][t]`` under (min, +) by repeated squaring, M with a zero diagonal."""
    check_instance(instance)
    n = instance.graph.node_count
    if n > MINPLUS_ORACLE_MAX_NODES:
        raise OracleBudgetError(f"min-plus oracle handles n <= {MINPLUS_ORACLE_MAX_NODES}, got {n}")
    inf = kernels.INF
    g = instance.graph
    adj = np.full((n, n), inf, dtype=np.int64)
    np.fill_diagonal(adj, 0)
    np.minimum.at(adj, (g.u, g.v), g.w)
    np.minimum.at(adj, (g.v, g.u), g.w)

    def product(x, y):
        out = np.full((n, n), inf, dtype=np.int64)
        for k in range(n):
            col, row = x[:, k], y[k, :]
            cand = col[:, None] + row[None, :]
            cand[(col == inf)[:, None] | (row == inf)[None, :]] = inf
            np.minimum(out, cand, out=out)
        return out

    result = np.full((n, n), inf, dtype=np.int64)
    np.fill_diagonal(result, 0)
    base, e = adj, instance.h
    while e:
        if e & 1:
            result = product(result, base)
        e >>= 1
        if e:
            base = product(base, base)
    x = int(result[instance.s, instance.t])
    return UNREACHABLE if x == inf else x


def enumerate_paths_oracle(instance: HopInstance) -> PathLength:
    """Minimum over all simple s-t paths with at most ``h`` edges (plain DFS)."""
    check_instance(instance)
    n = instance.graph.node_count
    # a simple path never has more than n - 1 edges
    hops = min(instance.h, n - 1)
    if n > ENUM_ORACLE_MAX_NODES or hops > ENUM_ORACLE_MAX_HOPS:
        raise OracleBudgetError(
            f"enumeration oracle handles n <= {ENUM_ORACLE_MAX_NODES} and h <= {ENUM_ORACLE_MAX_HOPS}"
        )
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for a, b, x in instance.graph.edges:
        if a != b:
            nbrs[a].append((b, x))
            nbrs[b].append((a, x))
    best: list[PathLength] = [UNREACHABLE]
    on_path = [False] * n

    def dfs(node, length, used):
        if node == instance.t and length < best[0]:
            best[0] = length
        if used == hops:
            return
        on_path[node] = True
        for nxt, x in nbrs[node]:
            if not on_path[nxt]:
                dfs(nxt, length + x, used + 1)
        on_path[node] = False

    dfs(instance.s, 0, 0)
    return best[0]


def dijkstra_unbounded(graph: Graph, s: int) -> list[PathLength]:
    """Plain Dijkstra distances, ignoring any hop bound."""
    problems = validate_instance(HopInstance(graph, s, s, 0))
    if problems:
        raise InstanceError(problems)
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(graph.node_count)]
    for e, (a, b, x) in enumerate(graph.edges):
        if x < 0:
            raise NegativeWeightError(f"edge {e} ({a}, {b}) has negative weight {x}")
        nbrs[a].append((b, x))
        nbrs[b].append((a, x))
    dist: list[PathLength] = [UNREACHABLE] * graph.node_count
    dist[s] = 0
    heap = [(0, s)]
    while heap:
        d, node = heapq.heappop(heap)
        if d > dist[node]:
            continue
        for nxt, x in nbrs[node]:
            if d + x < dist[nxt]:
                dist[nxt] = d + x
                heapq.heappush(heap, (d + x, nxt))
    return dist


def bellman_ford_solver(backend: str | None = None) -> Solver:
    def solve(instance: HopInstance) -> PathLength:
        return bellman_ford_hops(instance, backend).answer

    solve.__name__ = f"bellman_ford_{backend or kernels.BACKEND}"
    return solve


def dijkstra_solver(instance: HopInstance) -> PathLength:
    return dijkstra_unbounded(instance.graph, instance.s)[instance.t]


SOLVERS: dict[str, Solver] = {
    "bellman-ford": bellman_ford_solver(),
    "minplus-power": minplus_power_oracle,
    "enum": enumerate_paths_oracle,
}
