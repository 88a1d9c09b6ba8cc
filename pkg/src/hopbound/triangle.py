"""Negative Triangle on complete tripartite graphs A x B x C."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import WEIGHT_BUDGET, BudgetError


def _frozen(matrix, shape=None) -> np.ndarray:
    arr = np.asarray(matrix, dtype=np.int64)
    if arr.flags.writeable:
        arr = arr.copy()
    if arr.ndim != 2:
        raise ValueError("weight matrices must be two-dimensional")
    if shape is not None and arr.shape != shape:
        raise ValueError(f"expected shape {shape}, got {arr.shape}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class TriangleInstance:
    """Edge weights of the complete tripartite graph.

    ``wAB`` is P x N, ``wBC`` is N x N and ``wCA`` is N x P, so the triangle
    ``(a_i, b_j, c_k)`` weighs ``wAB[i, j] + wBC[j, k] + wCA[k, i]``.
    """

    wAB: np.ndarray
    wBC: np.ndarray
    wCA: np.ndarray

    def __post_init__(self):
        wAB = _frozen(self.wAB)
        P, N = wAB.shape
        if P < 1 or N < 1:
            raise ValueError("need P >= 1 and N >= 1")
        object.__setattr__(self, "wAB", wAB)
        object.__setattr__(self, "wBC", _frozen(self.wBC, (N, N)))
        object.__setattr__(self, "wCA", _frozen(self.wCA, (N, P)))
        if self.max_abs() > WEIGHT_BUDGET:
            raise BudgetError("triangle weights exceed budget 2^40")

    @property
    def P(self) -> int:
        return self.wAB.shape[0]

    @property
    def N(self) -> int:
        return self.wAB.shape[1]

    def max_abs(self) -> int:
        return max(max(int(m.max()), -int(m.min())) for m in (self.wAB, self.wBC, self.wCA))

    @property
    def W(self) -> int:
        """Weight scale for the reduction: at least 1 and at least every |w|."""
        return max(1, self.max_abs())

    def weight(self, i: int, j: int, k: int) -> int:
        return int(self.wAB[i, j]) + int(self.wBC[j, k]) + int(self.wCA[k, i])

    def __eq__(self, other):
        if not isinstance(other, TriangleInstance):
            return NotImplemented
        return all(
            np.array_equal(x, y)
            for x, y in ((self.wAB, other.wAB), (self.wBC, other.wBC), (self.wCA, other.wCA))
        )

    __hash__ = None


def find_negative_triangle(inst: TriangleInstance) -> Optional[tuple[int, int, int]]:
    """Lexicographically smallest ``(i, j, k)`` with negative total weight."""
    for i in range(inst.P):
        sums = inst.wAB[i][:, None] + inst.wBC + inst.wCA[:, i][None, :]
        hits = np.argwhere(sums < 0)
        if len(hits):
            j, k = hits[0]
            return i, int(j), int(k)
    return None


def partition_triangle(inst: TriangleInstance, part_size: int) -> list[TriangleInstance]:
    """Split A into consecutive chunks of ``part_size`` rows; B and C are shared.

    A witness ``(i, j, k)`` in part ``r`` is ``(r * part_size + i, j, k)`` in
    the input.
    """
    if not 1 <= part_size <= inst.P:
        raise ValueError(f"part_size must be in [1, {inst.P}], got {part_size}")
    parts = []
    for lo in range(0, inst.P, part_size):
        hi = min(lo + part_size, inst.P)
        parts.append(TriangleInstance(inst.wAB[lo:hi], inst.wBC, inst.wCA[:, lo:hi]))
    return parts
