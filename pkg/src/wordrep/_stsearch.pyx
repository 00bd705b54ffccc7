# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the semi-transitive orientation search (n <= 64).

Decision-for-decision port of _stsearch_py.search_orders using uint64
bitmasks; results and node counts match the pure kernel exactly.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc

FOUND = 0
EXHAUSTED = 1
BUDGET = 2

DEF _FOUND = 0
DEF _EXHAUSTED = 1
DEF _BUDGET = 2

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


def search_orders(adj, budget, first_mask):
    """Same contract as _stsearch_py.search_orders, restricted to n <= 64."""
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    cdef uint64_t full = <uint64_t> ((1 << n) - 1)
    cdef int64_t budget_i = min(budget, 2**62)
    cdef uint64_t first = <uint64_t> first_mask

    cdef uint64_t *buf = <uint64_t *> malloc(3 * n * sizeof(uint64_t))
    cdef int *ibuf = <int *> malloc((3 * n + 2) * sizeof(int))
    if buf == NULL or ibuf == NULL:
        if buf != NULL:
            free(<void *> buf)
        if ibuf != NULL:
            free(<void *> ibuf)
        raise MemoryError()
    cdef uint64_t *cadj = buf
    cdef uint64_t *anc = buf + n
    cdef uint64_t *desc = buf + 2 * n
    cdef int *order = ibuf
    cdef int *cap = ibuf + n
    cdef int *cand = ibuf + 2 * n + 1

    cdef int i
    for i in range(n):
        cadj[i] = <uint64_t> adj[i]
        anc[i] = 0
        desc[i] = 0

    cdef uint64_t placed = 0, anc_v, m, low, ym, ylow, ay, du, bit, clear
    cdef int64_t nodes = 0
    cdef int depth = 0, v, c, limit, u, y, w, status = _EXHAUSTED
    cdef bint bad

    cap[0] = _entry_cap(cadj, n, full, placed)
    cand[0] = 0
    try:
        with nogil:
            while True:
                v = -1
                c = cand[depth]
                limit = cap[depth]
                while c <= limit:
                    if not (placed >> c) & 1 and (depth > 0 or (first >> c) & 1):
                        v = c
                        break
                    c += 1
                if v < 0:
                    if depth == 0:
                        status = _EXHAUSTED
                        break
                    depth -= 1
                    w = order[depth]
                    m = anc[w]
                    clear = ~((<uint64_t> 1) << w)
                    while m:
                        low = m & (0 - m)
                        desc[_ctz(low)] &= clear
                        m ^= low
                    placed &= clear
                    cand[depth] = w + 1
                    continue

                if nodes >= budget_i:
                    status = _BUDGET
                    break
                nodes += 1
                bit = (<uint64_t> 1) << v
                anc_v = bit
                m = cadj[v] & placed
                while m:
                    low = m & (0 - m)
                    anc_v |= anc[_ctz(low)]
                    m ^= low

                bad = False
                m = cadj[v] & placed
                while m and not bad:
                    low = m & (0 - m)
                    u = _ctz(low)
                    m ^= low
                    du = desc[u]
                    ym = anc_v
                    while ym:
                        ylow = ym & (0 - ym)
                        y = _ctz(ylow)
                        ym ^= ylow
                        ay = anc_v if y == v else anc[y]
                        if ay & du & ~cadj[y] & ~ylow:
                            bad = True
                            break
                if bad:
                    cand[depth] = v + 1
                    continue

                anc[v] = anc_v
                m = anc_v
                while m:
                    low = m & (0 - m)
                    desc[_ctz(low)] |= bit
                    m ^= low
                placed |= bit
                order[depth] = v
                cand[depth] = v
                depth += 1
                if depth == n:
                    status = _FOUND
                    break
                cap[depth] = _entry_cap(cadj, n, full, placed)
                cand[depth] = 0

        if status == _FOUND:
            return FOUND, [order[i] for i in range(n)], nodes
        return status, None, nodes
    finally:
        free(<void *> buf)
        free(<void *> ibuf)


cdef inline int _entry_cap(uint64_t *cadj, int n, uint64_t full, uint64_t placed) nogil:
    cdef uint64_t unplaced = full & ~placed
    cdef uint64_t m = unplaced, low
    cdef int u
    while m:
        low = m & (0 - m)
        u = _ctz(low)
        if cadj[u] & unplaced == 0:
            return u
        m ^= low
    return n - 1
