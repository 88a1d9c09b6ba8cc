"""Vectorised numpy relaxation kernels (fallback when the extension is absent).

Arcs are laid out once per call, grouped by head node, so that a round is a
gather, an add and a segmented ``minimum.reduceat``.
"""

import numpy as np

INF = 2**62


def _arcs(u, v, w):
    tail = np.concatenate([u, v])
    head = np.concatenate([v, u])
    wt = np.concatenate([w, w])
    order = np.argsort(head, kind="stable")
    tail, head, wt = tail[order], head[order], wt[order]
    if len(head) == 0:
        return tail, wt, np.zeros(0, np.intp), head
    starts = np.flatnonzero(np.r_[True, head[1:] != head[:-1]])
    return tail, wt, starts, head[starts]


def _round(arcs, prev):
    tail, wt, starts, heads = arcs
    nxt = prev.copy()
    if len(starts) == 0:
        return nxt
    from_tail = prev[tail]
    cand = np.where(from_tail == INF, INF, from_tail + wt)
    best = np.minimum.reduceat(cand, starts)
    nxt[heads] = np.minimum(nxt[heads], best)
    return nxt


def relax_rounds(u, v, w, start, rounds):
    arcs = _arcs(np.asarray(u), np.asarray(v), np.asarray(w))
    row = np.array(start, dtype=np.int64)
    for _ in range(rounds):
        row = _round(arcs, row)
    return row


def relax_table(u, v, w, start, rounds):
    arcs = _arcs(np.asarray(u), np.asarray(v), np.asarray(w))
    table = np.empty((rounds + 1, len(start)), dtype=np.int64)
    table[0] = start
    for i in range(rounds):
        table[i + 1] = _round(arcs, table[i])
    return table
