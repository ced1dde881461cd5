# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled DSATUR decision search.  Mirrors ``_pykernel.dsatur_search``."""

from libc.stdlib cimport malloc, calloc, free
from posix.time cimport clock_gettime, timespec, CLOCK_MONOTONIC


cdef struct State:
    int n
    int t
    int *off
    int *nbr
    int *color
    int *cnt
    int *sat
    int *udeg
    long long nodes
    long long node_limit
    double deadline
    int aborted


cdef inline double _now() nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef inline int _assign(State *s, int v, int c) nogil:
    cdef int i, u, ok = 1
    s.color[v] = c
    for i in range(s.off[v], s.off[v + 1]):
        u = s.nbr[i]
        s.udeg[u] -= 1
        s.cnt[u * s.t + c] += 1
        if s.cnt[u * s.t + c] == 1:
            s.sat[u] += 1
            if s.color[u] < 0 and s.sat[u] >= s.t:
                ok = 0
    return ok


cdef inline void _unassign(State *s, int v, int c) nogil:
    cdef int i, u
    s.color[v] = -1
    for i in range(s.off[v], s.off[v + 1]):
        u = s.nbr[i]
        s.udeg[u] += 1
        s.cnt[u * s.t + c] -= 1
        if s.cnt[u * s.t + c] == 0:
            s.sat[u] -= 1


cdef int _rec(State *s, int remaining, int maxused) nogil:
    cdef int v, best = -1, bs = -1, bd = -1, c, top, r, nm
    if remaining == 0:
        return 1
    s.nodes += 1
    if s.node_limit >= 0 and s.nodes > s.node_limit:
        s.aborted = 1
        return -1
    if s.deadline >= 0 and (s.nodes & 1023) == 0 and _now() > s.deadline:
        s.aborted = 1
        return -1
    for v in range(s.n):
        if s.color[v] < 0:
            if s.sat[v] > bs or (s.sat[v] == bs and s.udeg[v] > bd):
                best = v
                bs = s.sat[v]
                bd = s.udeg[v]
    top = maxused + 2
    if top > s.t:
        top = s.t
    for c in range(top):
        if s.cnt[best * s.t + c]:
            continue
        if _assign(s, best, c):
            nm = maxused if maxused > c else c
            r = _rec(s, remaining - 1, nm)
            if r != 0:
                if r == -1:
                    _unassign(s, best, c)
                return r
        _unassign(s, best, c)
    return 0


def dsatur_search(int n, adj, int t, pre, long long node_limit=-1, double time_limit=-1.0):
    cdef State s
    cdef int i, j, k, v, c, total = 0, remaining, maxused = -1, status
    if t <= 0:
        return (1 if n == 0 else 0), [], 0
    for i in range(n):
        total += len(adj[i])
    s.n = n
    s.t = t
    s.off = <int *> malloc((n + 1) * sizeof(int))
    s.nbr = <int *> malloc((total + 1) * sizeof(int))
    s.color = <int *> malloc((n + 1) * sizeof(int))
    s.cnt = <int *> calloc(n * t + 1, sizeof(int))
    s.sat = <int *> calloc(n + 1, sizeof(int))
    s.udeg = <int *> malloc((n + 1) * sizeof(int))
    s.nodes = 0
    s.node_limit = node_limit
    s.deadline = _now() + time_limit if time_limit >= 0 else -1.0
    s.aborted = 0
    try:
        k = 0
        for i in range(n):
            s.off[i] = k
            s.color[i] = -1
            s.udeg[i] = len(adj[i])
            for j in adj[i]:
                s.nbr[k] = j
                k += 1
        s.off[n] = k
        for v, c in pre:
            if c >= t or s.color[v] >= 0 or s.cnt[v * t + c]:
                return 0, [], 0
            if not _assign(&s, v, c):
                return 0, [], 0
            if c > maxused:
                maxused = c
        remaining = 0
        for i in range(n):
            if s.color[i] < 0:
                remaining += 1
        with nogil:
            status = _rec(&s, remaining, maxused)
        if status == 1:
            return 1, [s.color[i] for i in range(n)], s.nodes
        return status, [], s.nodes
    finally:
        free(s.off)
        free(s.nbr)
        free(s.color)
        free(s.cnt)
        free(s.sat)
        free(s.udeg)


cdef inline unsigned long long _xorshift(unsigned long long s) nogil:
    s ^= s << 13
    s ^= s >> 7
    s ^= s << 17
    return s


def tabucol(int n, adj, int t, unsigned long long seed=1, long long max_iters=10000):
    """Compiled twin of ``_pykernel.tabucol`` (same moves, same RNG)."""
    cdef int i, j, k, v, u, c, best, cur, delta, bv, bc, bdelta, nconf, old, total = 0
    cdef long long it = 0, conflicts = 0, best_seen
    cdef unsigned long long state
    cdef int *off
    cdef int *nbr
    cdef int *color
    cdef int *gamma
    cdef long long *tabu
    if n == 0:
        return [], 0
    if t <= 0:
        return None, 0
    state = seed * 0x9E3779B97F4A7C15ULL + 1
    if state == 0:
        state = 1
    for i in range(n):
        total += len(adj[i])
    off = <int *> malloc((n + 1) * sizeof(int))
    nbr = <int *> malloc((total + 1) * sizeof(int))
    color = <int *> calloc(n, sizeof(int))
    gamma = <int *> calloc(n * t, sizeof(int))
    tabu = <long long *> calloc(n * t, sizeof(long long))
    try:
        k = 0
        for i in range(n):
            off[i] = k
            for j in adj[i]:
                nbr[k] = j
                k += 1
        off[n] = k
        with nogil:
            for v in range(n):
                best = 0
                for c in range(1, t):
                    if gamma[v * t + c] < gamma[v * t + best]:
                        best = c
                color[v] = best
                for i in range(off[v], off[v + 1]):
                    gamma[nbr[i] * t + best] += 1
            for v in range(n):
                conflicts += gamma[v * t + color[v]]
            conflicts //= 2
            best_seen = conflicts
            while conflicts > 0 and it < max_iters:
                it += 1
                bv = -1
                bc = -1
                bdelta = 1 << 30
                nconf = 0
                for v in range(n):
                    cur = gamma[v * t + color[v]]
                    if cur == 0:
                        continue
                    nconf += 1
                    for c in range(t):
                        if c == color[v]:
                            continue
                        delta = gamma[v * t + c] - cur
                        if delta < bdelta and (tabu[v * t + c] < it or conflicts + delta < best_seen):
                            bv = v
                            bc = c
                            bdelta = delta
                if bv < 0:
                    continue
                old = color[bv]
                color[bv] = bc
                for i in range(off[bv], off[bv + 1]):
                    u = nbr[i]
                    gamma[u * t + old] -= 1
                    gamma[u * t + bc] += 1
                conflicts += bdelta
                state = _xorshift(state)
                tabu[bv * t + old] = it + <long long>(state % 10) + (6 * nconf) // 10
                if conflicts < best_seen:
                    best_seen = conflicts
        if conflicts == 0:
            return [color[i] for i in range(n)], it
        return None, it
    finally:
        free(off)
        free(nbr)
        free(color)
        free(gamma)
        free(tabu)
