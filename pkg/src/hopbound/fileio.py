"""Canonical text formats (UTF-8, LF newlines).

Graph file::

    n m
    s t h
    u v w        (m lines)

Sequence triple: ``N`` then one line each for a, b, c.
Common instance: ``M N``, then a_l and b_l lines for each pair, then c.
Triangle instance: ``P N``, then P rows of wAB, N rows of wBC, N rows of wCA.
Reduction sidecar: ``kind threshold`` then ``role index node`` lines.

Loaders are exact (integers only, no rounding) and report the 1-based line
number of the first problem.  Savers emit single-space separated fields with
one trailing newline.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

import numpy as np

from .convolution import CommonUBInstance, SequenceTriple
from .graph import INT64_MAX, INT64_MIN, Graph, HopInstance
from .reductions import CONVOLUTION, CONVOLUTION_ROLES, TRIANGLE, TRIANGLE_ROLES, ReductionArtifact
from .triangle import TriangleInstance

Text = Union[bytes, str]


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class _Lines:
    def __init__(self, data: Text):
        if isinstance(data, bytes):
            try:
                data = data.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise FormatError(f"not UTF-8 text ({exc})") from None
        lines = data.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        self.lines = lines
        self.pos = 0

    def ints(self, count: int | None, what: str) -> list[int]:
        lineno = self.pos + 1
        if self.pos >= len(self.lines):
            raise FormatError(f"unexpected end of input, expected {what}", lineno)
        fields = self.lines[self.pos].split()
        self.pos += 1
        if count is not None and len(fields) != count:
            raise FormatError(f"expected {count} fields for {what}, got {len(fields)}", lineno)
        values = []
        for f in fields:
            try:
                x = int(f)
            except ValueError:
                raise FormatError(f"{what}: {f!r} is not an integer", lineno) from None
            if not INT64_MIN <= x <= INT64_MAX:
                raise FormatError(f"{what}: value {x} outside the 64-bit range", lineno)
            values.append(x)
        return values

    def finish(self, what: str):
        if self.pos != len(self.lines):
            raise FormatError(f"trailing content after {what}", self.pos + 1)


def _line(values) -> str:
    return " ".join(str(int(x)) for x in values) + "\n"


def load_graph(data: Text) -> HopInstance:
    src = _Lines(data)
    n, m = src.ints(2, "header 'n m'")
    if n < 1 or m < 0:
        raise FormatError(f"header needs n >= 1 and m >= 0, got {n} {m}", 1)
    s, t, h = src.ints(3, "instance line 's t h'")
    for name, x in (("source", s), ("target", t)):
        if not 0 <= x < n:
            raise FormatError(f"{name} {x} out of range [0, {n})", 2)
    if h < 0:
        raise FormatError(f"hop bound {h} is negative", 2)
    remaining = len(src.lines) - src.pos
    if remaining != m:
        raise FormatError(f"edge count mismatch: header says {m}, found {remaining} edge lines", 1)
    u = np.empty(m, dtype=np.int64)
    v = np.empty(m, dtype=np.int64)
    w = np.empty(m, dtype=np.int64)
    for e in range(m):
        a, b, x = src.ints(3, "edge 'u v w'")
        if not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"edge endpoint out of range [0, {n}): {a} {b}", src.pos)
        u[e], v[e], w[e] = a, b, x
    return HopInstance(Graph(n, u, v, w), s, t, h)


def save_graph(instance: HopInstance) -> bytes:
    g = instance.graph
    parts = [_line((g.node_count, g.edge_count)), _line((instance.s, instance.t, instance.h))]
    parts += [f"{a} {b} {x}\n" for a, b, x in g.edges]
    return "".join(parts).encode()


def load_triple(data: Text) -> SequenceTriple:
    src = _Lines(data)
    (N,) = src.ints(1, "header 'N'")
    if N < 1:
        raise FormatError("N must be positive", 1)
    a, b, c = (src.ints(N, f"sequence {name}") for name in "abc")
    src.finish("sequence triple")
    return SequenceTriple(a, b, c)


def save_triple(t: SequenceTriple) -> bytes:
    return (_line([t.N]) + _line(t.a) + _line(t.b) + _line(t.c)).encode()


def load_common(data: Text) -> CommonUBInstance:
    src = _Lines(data)
    M, N = src.ints(2, "header 'M N'")
    if M < 1 or N < 1:
        raise FormatError("M and N must be positive", 1)
    pairs = [(src.ints(N, f"a_{l}"), src.ints(N, f"b_{l}")) for l in range(1, M + 1)]
    c = src.ints(N, "c")
    src.finish("common instance")
    return CommonUBInstance(pairs, c)


def save_common(inst: CommonUBInstance) -> bytes:
    parts = [_line((inst.M, inst.N))]
    for a, b in inst.pairs:
        parts += [_line(a), _line(b)]
    parts.append(_line(inst.c))
    return "".join(parts).encode()


def load_triangle(data: Text) -> TriangleInstance:
    src = _Lines(data)
    P, N = src.ints(2, "header 'P N'")
    if P < 1 or N < 1:
        raise FormatError("P and N must be positive", 1)
    wAB = [src.ints(N, "wAB row") for _ in range(P)]
    wBC = [src.ints(N, "wBC row") for _ in range(N)]
    wCA = [src.ints(P, "wCA row") for _ in range(N)]
    src.finish("triangle instance")
    return TriangleInstance(wAB, wBC, wCA)


def save_triangle(inst: TriangleInstance) -> bytes:
    parts = [_line((inst.P, inst.N))]
    for m in (inst.wAB, inst.wBC, inst.wCA):
        parts += [_line(row) for row in m.tolist()]
    return "".join(parts).encode()


def save_sidecar(artifact: ReductionArtifact) -> bytes:
    parts = [f"{artifact.kind} {artifact.threshold}\n"]
    for role, nodes in artifact.node_map.items():
        parts += [f"{role} {idx} {node}\n" for idx, node in enumerate(nodes)]
    return "".join(parts).encode()


def load_artifact(graph_data: Text, sidecar: Text) -> ReductionArtifact:
    instance = load_graph(graph_data)
    src = _Lines(sidecar)
    if not src.lines:
        raise FormatError("empty sidecar", 1)
    head = src.lines[0].split()
    if len(head) != 2:
        raise FormatError("expected 'kind threshold'", 1)
    kind = head[0]
    try:
        threshold = int(head[1])
    except ValueError:
        raise FormatError(f"threshold {head[1]!r} is not an integer", 1) from None
    if kind not in (TRIANGLE, CONVOLUTION):
        raise FormatError(f"unknown kind {kind!r}", 1)
    roles = TRIANGLE_ROLES if kind == TRIANGLE else CONVOLUTION_ROLES
    table: dict[str, dict[int, int]] = {r: {} for r in roles}
    for lineno, text in enumerate(src.lines[1:], start=2):
        fields = text.split()
        if len(fields) != 3 or fields[0] not in table:
            raise FormatError(f"expected 'role index node' with role in {roles}", lineno)
        try:
            idx, node = int(fields[1]), int(fields[2])
        except ValueError:
            raise FormatError("index and node must be integers", lineno) from None
        if not 0 <= node < instance.n:
            raise FormatError(f"node {node} out of range", lineno)
        table[fields[0]][idx] = node
    node_map = {}
    for role, entries in table.items():
        if sorted(entries) != list(range(len(entries))):
            raise FormatError(f"role {role!r} indices are not 0..k-1")
        node_map[role] = tuple(entries[i] for i in range(len(entries)))
    return ReductionArtifact(instance, threshold, node_map, kind)


def read_bytes(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def write_bytes(path, data: bytes) -> None:
    Path(path).write_bytes(data)
