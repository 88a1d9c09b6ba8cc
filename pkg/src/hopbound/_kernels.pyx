# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled relaxation kernels for hop-limited Bellman-Ford.

Distances are int64 with ``INF`` as the unreachable marker.  Callers
guarantee endpoints are in range and that finite sums stay below 2^61.
"""

import numpy as np
from libc.stdint cimport int64_t

INF = 2**62
cdef int64_t _INF = 2**62


cdef void _round(const int64_t[::1] u, const int64_t[::1] v, const int64_t[::1] w,
                 const int64_t[::1] prev, int64_t[::1] nxt) noexcept nogil:
    cdef Py_ssize_t e, n = prev.shape[0], m = u.shape[0]
    cdef int64_t a, b, x, da, db, cand
    for e in range(n):
        nxt[e] = prev[e]
    for e in range(m):
        a = u[e]
        b = v[e]
        x = w[e]
        da = prev[a]
        db = prev[b]
        if da != _INF:
            cand = da + x
            if cand < nxt[b]:
                nxt[b] = cand
        if db != _INF:
            cand = db + x
            if cand < nxt[a]:
                nxt[a] = cand


def relax_rounds(const int64_t[::1] u, const int64_t[::1] v, const int64_t[::1] w,
                 const int64_t[::1] start, Py_ssize_t rounds):
    """Return d^(rounds) starting from row ``start`` (which is not modified)."""
    cdef int64_t[::1] prev = np.array(start, dtype=np.int64)
    cdef int64_t[::1] nxt = np.empty_like(prev)
    cdef int64_t[::1] tmp
    cdef Py_ssize_t i
    with nogil:
        for i in range(rounds):
            _round(u, v, w, prev, nxt)
            tmp = prev
            prev = nxt
            nxt = tmp
    return np.asarray(prev)


def relax_table(const int64_t[::1] u, const int64_t[::1] v, const int64_t[::1] w,
                const int64_t[::1] start, Py_ssize_t rounds):
    """Return every row d^(0..rounds) as a (rounds+1, n) array."""
    table = np.empty((rounds + 1, start.shape[0]), dtype=np.int64)
    cdef int64_t[:, ::1] rows = table
    cdef Py_ssize_t i
    rows[0, :] = start
    with nogil:
        for i in range(rounds):
            _round(u, v, w, rows[i], rows[i + 1])
    return table
