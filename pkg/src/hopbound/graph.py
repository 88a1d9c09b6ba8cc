"""Graph and hop-bounded instance types.

Graphs are undirected weighted multigraphs stored as three parallel int64
arrays (one record per edge).  Arrays are frozen after construction so a
``Graph`` can be shared freely between solvers and threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

import numpy as np

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

# Every edge weight and every sequence value produced by the generators and
# reductions stays below this magnitude, so sums of up to ~2^20 terms fit in
# int64 with room to spare for the internal unreachable marker.
WEIGHT_BUDGET = 2**40
# Largest |path length| the kernels may ever produce.
ACCUMULATION_BUDGET = 2**61


class BudgetError(OverflowError):
    """A value would leave the 64-bit safety budget."""


class InstanceError(ValueError):
    """An instance violates the Graph/HopInstance invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class _Unreachable:
    """Distance of a node that no admissible walk reaches.

    Compares greater than every integer and refuses arithmetic, so it can
    never silently turn into a finite number.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    __str__ = __repr__

    def __reduce__(self):
        return (_Unreachable, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("hopbound.UNREACHABLE")

    def __lt__(self, other):
        if isinstance(other, (int, np.integer, _Unreachable)):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (int, np.integer, _Unreachable)):
            return other is self
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, (int, np.integer, _Unreachable)):
            return other is not self
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, np.integer, _Unreachable)):
            return True
        return NotImplemented

    def _no_arithmetic(self, other):
        raise TypeError("UNREACHABLE does not support arithmetic")

    __add__ = __radd__ = __sub__ = __rsub__ = __neg__ = _no_arithmetic


UNREACHABLE = _Unreachable()

PathLength = Union[int, _Unreachable]


def is_finite(value: PathLength) -> bool:
    return value is not UNREACHABLE


def _frozen_int64(values) -> np.ndarray:
    arr = np.array(values, dtype=np.int64).reshape(-1)
    arr.flags.writeable = False
    return arr


class Graph:
    """Undirected weighted multigraph on nodes ``0..node_count-1``.

    Self-loops and parallel edges are allowed.  Construction does not
    validate endpoints; use :func:`validate_instance` for that.
    """

    __slots__ = ("node_count", "u", "v", "w")

    def __init__(self, node_count: int, u, v, w):
        u, v, w = _frozen_int64(u), _frozen_int64(v), _frozen_int64(w)
        if not (len(u) == len(v) == len(w)):
            raise ValueError("edge arrays must have equal length")
        self.node_count = int(node_count)
        self.u, self.v, self.w = u, v, w

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int, int]]) -> "Graph":
        edges = list(edges)
        if not edges:
            return cls(node_count, [], [], [])
        u, v, w = zip(*edges)
        # Python ints first so out-of-int64 weights fail loudly here
        for x in w:
            if not INT64_MIN <= x <= INT64_MAX:
                raise BudgetError(f"weight {x} outside the 64-bit range")
        return cls(node_count, u, v, w)

    @property
    def edge_count(self) -> int:
        return len(self.u)

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        return list(zip(self.u.tolist(), self.v.tolist(), self.w.tolist()))

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.w, other.w)
        )

    __hash__ = None

    def __repr__(self):
        return f"Graph(n={self.node_count}, m={self.edge_count})"

    def weight_lookup(self) -> dict[tuple[int, int], int]:
        """Map each unordered node pair to its lightest edge weight."""
        table: dict[tuple[int, int], int] = {}
        for a, b, x in self.edges:
            key = (a, b) if a <= b else (b, a)
            if key not in table or x < table[key]:
                table[key] = x
        return table


@dataclass(frozen=True)
class HopInstance:
    """A graph, a source, a target and a hop bound."""

    graph: Graph
    s: int
    t: int
    h: int

    @property
    def n(self) -> int:
        return self.graph.node_count

    @property
    def m(self) -> int:
        return self.graph.edge_count

    def with_hops(self, h: int) -> "HopInstance":
        return HopInstance(self.graph, self.s, self.t, h)


def validate_instance(instance: HopInstance) -> list[str]:
    """Return one message per violated invariant; empty means valid."""
    problems: list[str] = []
    g = instance.graph
    n = g.node_count
    if n < 0:
        problems.append("node count negative")
    bad = np.flatnonzero((g.u < 0) | (g.u >= n) | (g.v < 0) | (g.v >= n))
    for e in bad.tolist():
        for end in (int(g.u[e]), int(g.v[e])):
            if not 0 <= end < n:
                problems.append(f"edge {e}: endpoint {end} out of range")
    over = np.flatnonzero((g.w > WEIGHT_BUDGET) | (g.w < -WEIGHT_BUDGET))
    for e in over.tolist():
        problems.append(f"edge {e}: weight {int(g.w[e])} exceeds budget 2^40")
    if not 0 <= instance.s < max(n, 0):
        problems.append("source out of range")
    if not 0 <= instance.t < max(n, 0):
        problems.append("target out of range")
    if instance.h < 0:
        problems.append("hop bound negative")
    elif g.edge_count and len(over) == 0:
        wmax = int(np.abs(g.w).max())
        if instance.h * wmax >= ACCUMULATION_BUDGET:
            problems.append("hop bound times max weight exceeds accumulation budget 2^61")
    return problems


def check_instance(instance: HopInstance) -> None:
    problems = validate_instance(instance)
    if problems:
        raise InstanceError(problems)
