"""Gadget graphs that turn Negative Triangle and Common Max-Plus Convolution
Upper Bound into a single hop-bounded s-t shortest-path query.

Both constructions produce nonnegative undirected graphs together with a
threshold ``T``: the source instance is a YES-instance iff the shortest
s-t path with at most ``h`` hops is strictly shorter than ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .convolution import (
    CommonUBInstance,
    SequenceTriple,
    ViolatingQuadruple,
    normalize_instance,
    split_into_common,
)
from .graph import WEIGHT_BUDGET, BudgetError, Graph, HopInstance
from .solvers import Solver, bellman_ford_solver
from .triangle import TriangleInstance

TRIANGLE = "triangle"
CONVOLUTION = "convolution"

TRIANGLE_ROLES = ("a", "b", "c", "abar")
CONVOLUTION_ROLES = ("u", "x", "v", "w")


class PreconditionError(ValueError):
    pass


class WitnessError(ValueError):
    """A path does not have the shape the reduction guarantees."""


@dataclass(frozen=True)
class ReductionArtifact:
    instance: HopInstance
    threshold: int
    node_map: dict[str, tuple[int, ...]]
    kind: str

    def node(self, role: str, index: int) -> int:
        return self.node_map[role][index]

    def roles(self) -> dict[int, tuple[str, int]]:
        """Reverse map: graph node -> (role, index within role)."""
        return {node: (role, idx) for role, nodes in self.node_map.items() for idx, node in enumerate(nodes)}


class TriangleWitness(NamedTuple):
    i: int
    j: int
    k: int
    total: int


def _graph(n, edges):
    if edges and max(abs(x) for _, _, x in edges) > WEIGHT_BUDGET:
        raise BudgetError("reduction edge weight exceeds budget 2^40")
    return Graph.from_edges(n, edges)


def reduce_triangle_to_hop(inst: TriangleInstance) -> ReductionArtifact:
    """Build the layered graph A - B - C - Abar.

    With 1-based ``i`` the gadget weights are ``wAB + 3(P+1-i)W``,
    ``wBC + 3W`` and ``wCA + 3iW``; the three offsets of any canonical path
    add up to ``3(P+2)W``, which is the threshold.
    """
    P, N, W = inst.P, inst.N, inst.W
    a = tuple(range(P))
    b = tuple(range(P, P + N))
    c = tuple(range(P + N, P + 2 * N))
    abar = tuple(range(P + 2 * N, 2 * P + 2 * N))
    wAB, wBC, wCA = inst.wAB.tolist(), inst.wBC.tolist(), inst.wCA.tolist()
    edges = []
    edges += [(a[i], a[i + 1], 0) for i in range(P - 1)]
    edges += [(abar[i], abar[i + 1], 0) for i in range(P - 1)]
    # i is 0-based here: 3(P+1-(i+1))W == 3(P-i)W
    edges += [(a[i], b[j], wAB[i][j] + 3 * (P - i) * W) for i in range(P) for j in range(N)]
    edges += [(b[j], c[k], wBC[j][k] + 3 * W) for j in range(N) for k in range(N)]
    edges += [(c[k], abar[i], wCA[k][i] + 3 * (i + 1) * W) for k in range(N) for i in range(P)]
    instance = HopInstance(_graph(2 * P + 2 * N, edges), a[0], abar[-1], P + 2)
    return ReductionArtifact(
        instance, 3 * (P + 2) * W, {"a": a, "b": b, "c": c, "abar": abar}, TRIANGLE
    )


def check_reducible(inst: CommonUBInstance) -> None:
    if any(x < 0 for x in inst.values()):
        raise PreconditionError("all sequence values must be nonnegative (normalize first)")
    if any(y <= x for x, y in zip(inst.c, inst.c[1:])):
        raise PreconditionError("c must be strictly increasing (normalize first)")


def reduce_common_to_hop(inst: CommonUBInstance) -> ReductionArtifact:
    """Build three zero-weight chains u, v, w and one hub x_l per pair.

    Edges ``u_i - x_l`` weigh ``5W - a_l[i]``, ``x_l - v_j`` weigh
    ``5W - b_l[j]`` and ``v_0 - w_k`` weigh ``5W + c[k]``; the hop bound
    ``N + 2`` enforces ``i + j <= k`` on the path through ``(i, j, k, l)``.
    """
    check_reducible(inst)
    N, M = inst.N, inst.M
    W = max(1, max(inst.values()))
    u = tuple(range(N))
    v = tuple(range(N, 2 * N))
    w = tuple(range(2 * N, 3 * N))
    x = tuple(range(3 * N, 3 * N + M))
    edges = []
    for chain in (u, v, w):
        edges += [(chain[r], chain[r + 1], 0) for r in range(N - 1)]
    for l, (a_seq, _) in enumerate(inst.pairs):
        edges += [(u[i], x[l], 5 * W - a_seq[i]) for i in range(N)]
    for l, (_, b_seq) in enumerate(inst.pairs):
        edges += [(x[l], v[j], 5 * W - b_seq[j]) for j in range(N)]
    edges += [(v[0], w[k], 5 * W + inst.c[k]) for k in range(N)]
    instance = HopInstance(_graph(3 * N + M, edges), u[0], w[-1], N + 2)
    return ReductionArtifact(instance, 15 * W, {"u": u, "x": x, "v": v, "w": w}, CONVOLUTION)


def canonical_path(artifact: ReductionArtifact, index: tuple) -> list[int]:
    """The path the construction associates with a triple / quadruple.

    Triangle: ``(i, j, k)``; convolution: ``(i, j, k, l)`` with 1-based ``l``.
    """
    nm = artifact.node_map
    if artifact.kind == TRIANGLE:
        i, j, k = index
        return [*nm["a"][: i + 1], nm["b"][j], nm["c"][k], *nm["abar"][i:]]
    i, j, k, l = index
    return [*nm["u"][: i + 1], nm["x"][l - 1], *reversed(nm["v"][: j + 1]), *nm["w"][k:]]


def path_length(graph: Graph, path: list[int], lookup: Optional[dict] = None) -> int:
    lookup = graph.weight_lookup() if lookup is None else lookup
    total = 0
    for p, q in zip(path, path[1:]):
        key = (p, q) if p <= q else (q, p)
        if key not in lookup:
            raise WitnessError(f"no edge between {p} and {q}")
        total += lookup[key]
    return total


def extract_witness(artifact: ReductionArtifact, path: list[int]):
    """Map a short hop-bounded s-t path back to a source-problem solution.

    Returns a :class:`TriangleWitness` or a relaxed
    :class:`~hopbound.convolution.ViolatingQuadruple`; the source inequality
    is re-checked from the gadget edge weights before returning.
    """
    inst = artifact.instance
    if not path or path[0] != inst.s or path[-1] != inst.t:
        raise WitnessError("path must run from s to t")
    if len(path) - 1 > inst.h:
        raise WitnessError(f"path uses {len(path) - 1} hops, bound is {inst.h}")
    lookup = inst.graph.weight_lookup()
    length = path_length(inst.graph, path, lookup)
    if length >= artifact.threshold:
        raise WitnessError(f"path length {length} is not below the threshold {artifact.threshold}")
    roles = artifact.roles()
    tags = [roles[node] for node in path]

    if artifact.kind == TRIANGLE:
        first = next(p for p, (role, _) in enumerate(tags) if role != "a")
        last = max(p for p, (role, _) in enumerate(tags) if role == "abar" and tags[p - 1][0] != "abar")
        (_, i), (role_b, j) = tags[first - 1], tags[first]
        (role_c, k), (_, i2) = tags[last - 1], tags[last]
        if role_b != "b" or role_c != "c" or i != i2:
            raise WitnessError(f"path does not have the A..a_i-b_j-c_k-abar_i..Abar shape: {tags}")
        # detours between b_j and c_k are replaced by the direct edge
        direct = [artifact.node("a", i), artifact.node("b", j), artifact.node("c", k), artifact.node("abar", i)]
        total = path_length(inst.graph, direct, lookup) - artifact.threshold
        if total >= 0:
            raise WitnessError(f"triangle ({i}, {j}, {k}) is not negative (sum {total})")
        return TriangleWitness(i, j, k, total)

    N = len(artifact.node_map["u"])
    p = 0
    while p < len(tags) and tags[p] == ("u", p):
        p += 1
    i = p - 1
    if i < 0 or p >= len(tags) or tags[p][0] != "x":
        raise WitnessError(f"path does not leave the u-chain through a hub: {tags}")
    l = tags[p][1] + 1
    p += 1
    if p >= len(tags) or tags[p][0] != "v":
        raise WitnessError(f"hub is not followed by a v node: {tags}")
    j = tags[p][1]
    expected_v = [("v", r) for r in range(j, -1, -1)]
    if tags[p : p + j + 1] != expected_v:
        raise WitnessError(f"path does not walk the v-chain down to v_0: {tags}")
    p += j + 1
    if p >= len(tags) or tags[p][0] != "w":
        raise WitnessError(f"v_0 is not followed by a w node: {tags}")
    k = tags[p][1]
    if tags[p:] != [("w", r) for r in range(k, N)]:
        raise WitnessError(f"path does not walk the w-chain up to w_(N-1): {tags}")
    if i + j > k:
        raise WitnessError(f"indices violate i + j <= k: ({i}, {j}, {k})")
    gadget = [artifact.node("u", i), artifact.node("x", l - 1), artifact.node("v", j)]
    margin = path_length(inst.graph, gadget, lookup) + lookup[_key(artifact.node("v", 0), artifact.node("w", k))]
    if margin >= artifact.threshold:
        raise WitnessError(f"quadruple ({i}, {j}, {k}, {l}) is not violating")
    return ViolatingQuadruple(i, j, k, l, relaxed=True)


def _key(p, q):
    return (p, q) if p <= q else (q, p)


def _decide(artifact: ReductionArtifact, solver: Optional[Solver]) -> bool:
    solver = solver or bellman_ford_solver()
    return solver(artifact.instance) < artifact.threshold


def decide_triangle_via_hop(inst: TriangleInstance, solver: Optional[Solver] = None) -> bool:
    return _decide(reduce_triangle_to_hop(inst), solver)


def decide_common_via_hop(inst: CommonUBInstance, solver: Optional[Solver] = None) -> bool:
    """Input must already be normalized (nonnegative, strictly increasing c)."""
    return _decide(reduce_common_to_hop(inst), solver)


def maxplus_ub_via_pipeline(t: SequenceTriple, block: int, solver: Optional[Solver] = None) -> bool:
    """split -> normalize -> reduce -> solve, OR-ed over the groups."""
    for common, _ in split_into_common(t, block):
        normalized, _ = normalize_instance(common)
        if decide_common_via_hop(normalized, solver):
            return True
    return False
