"""Seeded instance generators.

All randomness comes from numpy's PCG64 bit generator wrapped in
``numpy.random.Generator`` and seeded with the caller's seed, so the same
parameters always give byte-identical instances.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .convolution import CommonUBInstance, SequenceTriple
from .graph import WEIGHT_BUDGET, BudgetError, Graph, HopInstance
from .triangle import TriangleInstance


class DegenerateParameterWarning(UserWarning):
    """Hop bound exceeds the node count: plain shortest path, no hop constraint."""


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _check_wmax(wmax):
    if not 0 <= wmax <= WEIGHT_BUDGET:
        raise BudgetError(f"wmax must be in [0, 2^40], got {wmax}")


def _pairs_from_index(n: int, idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # rank r of pair (u, v), u < v, in row-major order over the upper triangle
    u_arr = np.arange(n, dtype=np.int64)
    first = u_arr * (2 * n - u_arr - 1) // 2
    u = np.searchsorted(first, idx, side="right") - 1
    v = idx - first[u] + u + 1
    return u.astype(np.int64), v.astype(np.int64)


def gen_random_graph(n: int, m: int, wmax: int, seed: int) -> HopInstance:
    """Uniform simple graph with exactly ``m`` edges; ``s=0, t=1, h=0``.

    Edges are listed in increasing (u, v) order with ``u < v``.
    """
    cap = n * (n - 1) // 2
    if n < 2 or not 0 <= m <= cap:
        raise ValueError(f"need n >= 2 and 0 <= m <= n(n-1)/2 = {cap}, got n={n}, m={m}")
    _check_wmax(wmax)
    rng = rng_for(seed)
    idx = np.sort(rng.choice(cap, size=m, replace=False))
    u, v = _pairs_from_index(n, idx)
    w = rng.integers(0, wmax, size=m, endpoint=True, dtype=np.int64)
    return HopInstance(Graph(n, u, v, w), 0, 1, 0)


def _gen_multigraph(n: int, m: int, wmax: int, seed: int) -> Graph:
    # m above n(n-1)/2: every pair repeated m // cap times, the rest sampled
    cap = n * (n - 1) // 2
    rng = rng_for(seed)
    reps, rest = divmod(m, cap)
    idx = np.concatenate([np.tile(np.arange(cap), reps), np.sort(rng.choice(cap, size=rest, replace=False))])
    idx.sort(kind="stable")
    u, v = _pairs_from_index(n, idx)
    w = rng.integers(0, wmax, size=m, endpoint=True, dtype=np.int64)
    return Graph(n, u, v, w)


@dataclass(frozen=True)
class ParamPoint:
    """One point of the (density, hop) parameter plane: ``n = m^nu``, ``h = m^eta``."""

    m: int
    nu: float
    eta: float
    seed: int = 0
    wmax: int = 100

    @property
    def n(self) -> int:
        return int(round(self.m**self.nu))

    @property
    def h(self) -> int:
        return int(round(self.m**self.eta))

    @property
    def degenerate(self) -> bool:
        return self.h > self.n


@dataclass(frozen=True)
class ParamInstance:
    point: ParamPoint
    n: int
    m: int
    h: int
    degenerate: bool
    instance: Optional[HopInstance]
    multigraph: bool = False


def gen_param_instance(p: ParamPoint) -> ParamInstance:
    """Random instance at a parameter point.

    Points with ``h > n`` sit in the degenerate corner where the hop bound
    never binds; they are tagged and returned without an instance.  When
    ``m`` exceeds ``n(n-1)/2`` (possible near ``nu = 1/2``) parallel edges
    make up the difference.
    """
    n, m, h = p.n, p.m, p.h
    if n < 2 or h < 1 or m < 1:
        raise ValueError(f"infeasible parameters: n={n}, m={m}, h={h}")
    _check_wmax(p.wmax)
    if p.degenerate:
        warnings.warn(f"h={h} > n={n}: degenerate point, no hop constraint", DegenerateParameterWarning)
        return ParamInstance(p, n, m, h, True, None)
    multi = m > n * (n - 1) // 2
    if multi:
        graph = _gen_multigraph(n, m, p.wmax, p.seed)
    else:
        graph = gen_random_graph(n, m, p.wmax, p.seed).graph
    return ParamInstance(p, n, m, h, False, HopInstance(graph, 0, 1, h), multi)


def gen_triangle_instance(P: int, N: int, wmax: int, seed: int) -> TriangleInstance:
    if P < 1 or N < 1:
        raise ValueError("P and N must be positive")
    _check_wmax(wmax)
    rng = rng_for(seed)
    draw = lambda shape: rng.integers(-wmax, wmax, size=shape, endpoint=True, dtype=np.int64)  # noqa: E731
    return TriangleInstance(draw((P, N)), draw((N, N)), draw((N, P)))


def gen_common_instance(N: int, M: int, wmax: int, seed: int) -> CommonUBInstance:
    if N < 1 or M < 1:
        raise ValueError("N and M must be positive")
    _check_wmax(wmax)
    rng = rng_for(seed)
    vals = rng.integers(0, wmax, size=(2 * M + 1, N), endpoint=True, dtype=np.int64).tolist()
    pairs = [(vals[2 * l], vals[2 * l + 1]) for l in range(M)]
    return CommonUBInstance(pairs, vals[-1])


def gen_sequence_triple(N: int, wmax: int, seed: int) -> SequenceTriple:
    if N < 1:
        raise ValueError("N must be positive")
    _check_wmax(wmax)
    a, b, c = rng_for(seed).integers(0, wmax, size=(3, N), endpoint=True, dtype=np.int64).tolist()
    return SequenceTriple(a, b, c)
