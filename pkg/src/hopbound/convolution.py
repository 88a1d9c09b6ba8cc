"""Sequence problems: min-plus convolution, max-plus convolution upper
bound, its common-bound variant, monotone normalization and the block
self-reduction that turns one triple into many common instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import WEIGHT_BUDGET, BudgetError


def _ints(values) -> tuple[int, ...]:
    return tuple(int(x) for x in values)


def _check_budget(values, what):
    for x in values:
        if not -WEIGHT_BUDGET <= x <= WEIGHT_BUDGET:
            raise BudgetError(f"{what} value {x} exceeds budget 2^40")


@dataclass(frozen=True)
class SequenceTriple:
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, _ints(getattr(self, name)))
        if not (len(self.a) == len(self.b) == len(self.c)):
            raise ValueError("a, b and c must have equal length")
        if not self.a:
            raise ValueError("sequences must be nonempty")
        _check_budget(self.a + self.b + self.c, "sequence")

    @property
    def N(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class CommonUBInstance:
    """``M`` pairs ``(a_l, b_l)`` checked against one shared bound ``c``."""

    pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    c: tuple[int, ...]

    def __post_init__(self):
        pairs = tuple((_ints(a), _ints(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "c", _ints(self.c))
        if not pairs:
            raise ValueError("need at least one pair (M >= 1)")
        N = len(self.c)
        if N == 0:
            raise ValueError("sequences must be nonempty")
        for a, b in pairs:
            if len(a) != N or len(b) != N:
                raise ValueError("all sequences must have length N")
            _check_budget(a + b, "sequence")
        _check_budget(self.c, "sequence")

    @property
    def M(self) -> int:
        return len(self.pairs)

    @property
    def N(self) -> int:
        return len(self.c)

    def values(self):
        for a, b in self.pairs:
            yield from a
            yield from b
        yield from self.c


@dataclass(frozen=True, order=True)
class ViolatingQuadruple:
    """``c[k] < a_l[i] + b_l[j]`` with ``i + j == k`` (or ``<=`` if relaxed).

    ``i, j, k`` are 0-based; ``l`` is 1-based.
    """

    i: int
    j: int
    k: int
    l: int = 1
    relaxed: bool = field(default=False, compare=False)


def minplus_convolution(a: Sequence[int], b: Sequence[int], full: bool = False) -> list[int]:
    """``c[k] = min_{i+j=k} a[i] + b[j]`` for ``k < N`` (all ``2N-1`` if ``full``)."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    if not a:
        raise ValueError("sequences must be nonempty")
    N = len(a)
    out_len = 2 * N - 1 if full else N
    out: list[Optional[int]] = [None] * out_len
    for i in range(N):
        for j in range(N):
            k = i + j
            if k >= out_len:
                break
            s = a[i] + b[j]
            if out[k] is None or s < out[k]:
                out[k] = s
    return out  # type: ignore[return-value]


def _first_violation(a, b, c, relaxed):
    # lexicographic (k, i, j)
    N = len(c)
    for k in range(N):
        if relaxed:
            for i in range(k + 1):
                for j in range(k - i + 1):
                    if c[k] < a[i] + b[j]:
                        return i, j, k
        else:
            for i in range(k + 1):
                if c[k] < a[i] + b[k - i]:
                    return i, k - i, k
    return None


def maxplus_ub_check(t: SequenceTriple) -> Optional[ViolatingQuadruple]:
    hit = _first_violation(t.a, t.b, t.c, relaxed=False)
    return None if hit is None else ViolatingQuadruple(*hit, l=1)


def common_ub_check(inst: CommonUBInstance, relaxed: bool = False) -> Optional[ViolatingQuadruple]:
    """Smallest violating quadruple by (l, k, i), or ``None``."""
    for l, (a, b) in enumerate(inst.pairs, start=1):
        hit = _first_violation(a, b, inst.c, relaxed)
        if hit is not None:
            return ViolatingQuadruple(*hit, l=l, relaxed=relaxed)
    return None


@dataclass(frozen=True)
class NormalizationInfo:
    shift: int  # W' = max |value| in the input
    ramp: int  # D = 2W' + 1, added once per index step


def normalize_instance(inst: CommonUBInstance) -> tuple[CommonUBInstance, NormalizationInfo]:
    """Make every sequence nonnegative and strictly increasing.

    ``a'[i] = a[i] + (i+1)D + W'``, ``b'[j] = b[j] + (j+1)D + W'`` and
    ``c'[k] = c[k] + (k+2)D + 2W'``.  For ``i + j == k`` the added terms cancel,
    so ``a'+b'-c'`` equals ``a+b-c`` at every exact index triple.
    """
    shift = max(abs(x) for x in inst.values())
    ramp = 2 * shift + 1
    top = shift + (inst.N + 1) * ramp + 2 * shift
    if top > WEIGHT_BUDGET:
        raise BudgetError(f"normalized values would reach {top} > 2^40")

    def up(seq, offset, base):
        return tuple(x + (idx + offset) * ramp + base for idx, x in enumerate(seq))

    pairs = tuple((up(a, 1, shift), up(b, 1, shift)) for a, b in inst.pairs)
    c = up(inst.c, 2, 2 * shift)
    return CommonUBInstance(pairs, c), NormalizationInfo(shift, ramp)


def is_normalized(inst: CommonUBInstance) -> bool:
    for seq in [s for pair in inst.pairs for s in pair] + [inst.c]:
        if seq[0] < 0 or any(y <= x for x, y in zip(seq, seq[1:])):
            return False
    return True


@dataclass(frozen=True)
class BlockMap:
    """Where the pieces of one emitted common instance came from."""

    group: int
    block: int
    N: int
    blocks: tuple[tuple[int, int], ...]  # (p, q) for pair l = 1..M

    def to_global(self, quad: ViolatingQuadruple) -> tuple[int, int, int]:
        p, q = self.blocks[quad.l - 1]
        B = self.block
        return p * B + quad.i, q * B + quad.j, self.group * B + quad.k

    def is_padding(self, quad: ViolatingQuadruple) -> bool:
        i, j, k = self.to_global(quad)
        B = self.block
        return quad.i >= B or quad.j >= B or i >= self.N or j >= self.N or k >= self.N


def split_into_common(t: SequenceTriple, block: int) -> list[tuple[CommonUBInstance, BlockMap]]:
    """Block self-reduction of one upper-bound triple.

    ``a`` and ``b`` are cut into blocks of length ``block``; the pairs of
    blocks whose indices sum to ``g`` share the window of ``c`` starting at
    ``g * block`` and become one common instance of length ``2*block - 1``.
    Padding can never take part in a violation.
    """
    N = t.N
    if not 1 <= block <= N:
        raise ValueError(f"block length must be in [1, {N}], got {block}")
    wmax = max(abs(x) for x in t.a + t.b + t.c)
    pad_low = -(3 * wmax + 1)
    pad_high = 3 * wmax + 1
    L = 2 * block - 1
    G = -(-N // block)

    def piece(seq, start, length, pad):
        return tuple(seq[start + r] if r < block and start + r < N else pad for r in range(length))

    out = []
    for g in range(2 * G - 1):
        blocks = tuple((p, g - p) for p in range(max(0, g - G + 1), min(g, G - 1) + 1))
        pairs = tuple(
            (piece(t.a, p * block, L, pad_low), piece(t.b, q * block, L, pad_low)) for p, q in blocks
        )
        start = g * block
        c = tuple(t.c[start + r] if start + r < N else pad_high for r in range(L))
        out.append((CommonUBInstance(pairs, c), BlockMap(g, block, N, blocks)))
    return out
