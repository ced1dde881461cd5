"""Pure-Python DSATUR decision search (fallback for the compiled kernel).

Both kernels take the same arguments and return ``(status, colors, nodes)``
with status 1 = coloured, 0 = proved impossible, -1 = budget exhausted.
Colours are 0-based.  The two implementations follow the same branching
order, so they report identical node counts.
"""
from __future__ import annotations

import sys
import time


def dsatur_search(n, adj, t, pre, node_limit=-1, time_limit=-1.0):
    """Decide whether the graph ``adj`` (neighbour lists) is ``t``-colourable.

    ``pre`` is a list of ``(vertex, colour)`` pairs fixed up front.  A new
    colour is only opened when every smaller one has been used, which removes
    the permutation symmetry among colours not touched by ``pre``.
    """
    color = [-1] * n
    cnt = [[0] * max(t, 1) for _ in range(n)]
    sat = [0] * n
    udeg = [len(a) for a in adj]
    deadline = time.monotonic() + time_limit if time_limit >= 0 else None
    nodes = 0
    aborted = False

    def assign(v, c):
        color[v] = c
        ok = True
        for u in adj[v]:
            udeg[u] -= 1
            row = cnt[u]
            row[c] += 1
            if row[c] == 1:
                sat[u] += 1
                if color[u] < 0 and sat[u] >= t:
                    ok = False
        return ok

    def unassign(v, c):
        color[v] = -1
        for u in adj[v]:
            udeg[u] += 1
            row = cnt[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] -= 1

    if t <= 0:
        return (1 if n == 0 else 0), [], 0
    maxused = -1
    for v, c in pre:
        if c >= t or color[v] >= 0 or cnt[v][c]:
            return 0, [], 0
        if not assign(v, c):
            return 0, [], 0
        maxused = max(maxused, c)
    remaining = sum(1 for c in color if c < 0)

    def rec(remaining, maxused):
        nonlocal nodes, aborted
        if remaining == 0:
            return 1
        nodes += 1
        if node_limit >= 0 and nodes > node_limit:
            aborted = True
            return -1
        if deadline is not None and (nodes & 1023) == 0 and time.monotonic() > deadline:
            aborted = True
            return -1
        best = -1
        bs = -1
        bd = -1
        for v in range(n):
            if color[v] < 0:
                s = sat[v]
                if s > bs or (s == bs and udeg[v] > bd):
                    best, bs, bd = v, s, udeg[v]
        row = cnt[best]
        top = min(t, maxused + 2)
        for c in range(top):
            if row[c]:
                continue
            if assign(best, c):
                r = rec(remaining - 1, max(maxused, c))
                if r != 0:
                    if r == -1:
                        unassign(best, c)
                    return r
            unassign(best, c)
        return 0

    old = sys.getrecursionlimit()
    if old < 2 * n + 100:
        sys.setrecursionlimit(2 * n + 100)
    try:
        status = rec(remaining, maxused)
    finally:
        sys.setrecursionlimit(old)
    if status == 1:
        return 1, list(color), nodes
    return status, [], nodes


_MASK64 = (1 << 64) - 1


def _xorshift(state):
    state ^= (state << 13) & _MASK64
    state ^= state >> 7
    state ^= (state << 17) & _MASK64
    return state


def tabucol(n, adj, t, seed=1, max_iters=10000):
    """Tabu search for a conflict-free ``t``-colouring.

    Returns ``(colors or None, iterations)``.  Moves are scanned in vertex
    then colour order and the first best non-tabu move wins; tabu tenure is
    ``rand % 10 + 0.6 * conflicting vertices``.
    """
    if n == 0:
        return [], 0
    if t <= 0:
        return None, 0
    state = (seed * 0x9E3779B97F4A7C15 + 1) & _MASK64 or 1
    color = [0] * n
    gamma = [[0] * t for _ in range(n)]
    for v in range(n):
        row = gamma[v]
        best = 0
        for c in range(1, t):
            if row[c] < row[best]:
                best = c
        color[v] = best
        for u in adj[v]:
            gamma[u][best] += 1
    conflicts = sum(gamma[v][color[v]] for v in range(n)) // 2
    tabu = [[0] * t for _ in range(n)]
    best_seen = conflicts
    it = 0
    while conflicts > 0 and it < max_iters:
        it += 1
        bv = -1
        bc = -1
        bdelta = 1 << 30
        nconf = 0
        for v in range(n):
            row = gamma[v]
            cur = row[color[v]]
            if cur == 0:
                continue
            nconf += 1
            for c in range(t):
                if c == color[v]:
                    continue
                delta = row[c] - cur
                if delta < bdelta and (tabu[v][c] < it or conflicts + delta < best_seen):
                    bv, bc, bdelta = v, c, delta
        if bv < 0:
            continue
        old = color[bv]
        color[bv] = bc
        for u in adj[bv]:
            gamma[u][old] -= 1
            gamma[u][bc] += 1
        conflicts += bdelta
        state = _xorshift(state)
        tabu[bv][old] = it + (state % 10) + (6 * nconf) // 10
        if conflicts < best_seen:
            best_seen = conflicts
    if conflicts == 0:
        return color, it
    return None, it
