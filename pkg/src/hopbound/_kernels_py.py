"""Plain-Python relaxation loops, a line-by-line transcription of the
textbook two-array Bellman-Ford.  Slow; used as a reference backend."""

import numpy as np

INF = 2**62


def _round(edges, prev):
    nxt = list(prev)
    for a, b, x in edges:
        if prev[a] != INF and prev[a] + x < nxt[b]:
            nxt[b] = prev[a] + x
        if prev[b] != INF and prev[b] + x < nxt[a]:
            nxt[a] = prev[b] + x
    return nxt


def relax_rounds(u, v, w, start, rounds):
    edges = list(zip(np.asarray(u).tolist(), np.asarray(v).tolist(), np.asarray(w).tolist()))
    row = np.asarray(start).tolist()
    for _ in range(rounds):
        row = _round(edges, row)
    return np.array(row, dtype=np.int64)


def relax_table(u, v, w, start, rounds):
    edges = list(zip(np.asarray(u).tolist(), np.asarray(v).tolist(), np.asarray(w).tolist()))
    rows = [np.asarray(start).tolist()]
    for _ in range(rounds):
        rows.append(_round(edges, rows[-1]))
    return np.array(rows, dtype=np.int64)
