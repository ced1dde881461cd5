"""Isomorphism of dart-labelled multigraphs by colour refinement and backtracking.

Vertices may carry labels and darts may carry labels.  An isomorphism must
preserve vertex labels, and for every pair of vertices the multiset of
``(label(x), label(inv x))`` over darts ``x`` from ``u`` to ``v``.  Plain
graph isomorphism is the special case with constant labels.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Iterator

from .graph import DartGraph


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class Isomorphism:
    """``vertex_map`` and ``dart_map`` send the first graph onto the second."""

    vertex_map: dict[str, str]
    dart_map: dict[str, str]

    def edge_map(self) -> dict[str, str]:
        out = {}
        for x, y in self.dart_map.items():
            if x.endswith("+"):
                out[x[:-1]] = y[:-1]
        return out


class _Prepared:
    def __init__(self, G: DartGraph, vlabel, dlabel, codes: dict):
        self.G = G
        n = G.n

        def code(key):
            c = codes.get(key)
            if c is None:
                c = codes[key] = len(codes)
            return c

        self.vcode = [code(("v", vlabel(G.vertices[v]) if vlabel else None)) for v in range(n)]
        pair = []
        for x in range(2 * G.m):
            if dlabel is None:
                pair.append(code(("d", None)))
            else:
                pair.append(code(("d", dlabel(G.darts[x]), dlabel(G.darts[x ^ 1]))))
        self.pair = pair
        self.out = [[(G.head_i(x), pair[x]) for x in G.out_i(v)] for v in range(n)]
        self.adj = [Counter(o) for o in self.out]


def _refine(A: _Prepared, B: _Prepared, ca: list[int], cb: list[int]):
    """Joint refinement; returns new colourings or None if they diverge."""
    ncls = len(set(ca))
    while True:
        sa = [(ca[v], tuple(sorted((ca[w], l) for w, l in A.out[v]))) for v in range(len(ca))]
        sb = [(cb[v], tuple(sorted((cb[w], l) for w, l in B.out[v]))) for v in range(len(cb))]
        if Counter(sa) != Counter(sb):
            return None
        ids = {s: i for i, s in enumerate(sorted(set(sa)))}
        ca = [ids[s] for s in sa]
        cb = [ids[s] for s in sb]
        if len(ids) == ncls:
            return ca, cb
        ncls = len(ids)


def _check(A: _Prepared, B: _Prepared, phi: list[int]) -> bool:
    for v in range(len(phi)):
        if Counter((phi[w], l) for w, l in A.out[v]) != B.adj[phi[v]]:
            return False
        if A.vcode[v] != B.vcode[phi[v]]:
            return False
    return True


def _search(A, B, ca, cb, budget) -> Iterator[list[int]]:
    budget[0] -= 1
    if budget[0] < 0:
        raise BudgetExceeded("isomorphism search budget exceeded")
    r = _refine(A, B, ca, cb)
    if r is None:
        return
    ca, cb = r
    n = len(ca)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(ca[v], []).append(v)
    target = None
    for c in sorted(cells, key=lambda c: (len(cells[c]), c)):
        if len(cells[c]) > 1:
            target = c
            break
    if target is None:
        inv = {c: w for w, c in enumerate(cb)}
        phi = [inv[ca[v]] for v in range(n)]
        if _check(A, B, phi):
            yield phi
        return
    v = cells[target][0]
    fresh = n + 1 + max(ca)
    for w in range(n):
        if cb[w] != target:
            continue
        na = list(ca)
        nb = list(cb)
        na[v] = fresh
        nb[w] = fresh
        yield from _search(A, B, na, nb, budget)


def _prefilter(G: DartGraph, H: DartGraph) -> bool:
    return (G.n == H.n and G.m == H.m
            and sorted(G.degrees()) == sorted(H.degrees())
            and sum(a == b for a, b in G.ends) == sum(a == b for a, b in H.ends))


def _dart_bijection(A: _Prepared, B: _Prepared, phi: list[int]) -> dict[str, str]:
    G, H = A.G, B.G
    pool: dict[tuple, list[int]] = {}
    for y in range(0, 2 * H.m):
        pool.setdefault((H.tail_i(y), H.head_i(y), B.pair[y]), []).append(y)
    used = set()
    dmap = {}
    for e in range(G.m):
        x = 2 * e
        key = (phi[G.tail_i(x)], phi[G.head_i(x)], A.pair[x])
        for y in pool[key]:
            if y not in used and (y ^ 1) not in used:
                break
        else:  # pragma: no cover - guarded by _check
            raise AssertionError("dart bijection failed after vertex check")
        used.add(y)
        used.add(y ^ 1)
        dmap[G.darts[x]] = H.darts[y]
        dmap[G.darts[x ^ 1]] = H.darts[y ^ 1]
    return dmap


def iter_isomorphisms(
    G: DartGraph,
    H: DartGraph,
    vertex_label: Callable[[str], Hashable] | None = None,
    dart_label: Callable[[str], Hashable] | None = None,
    vertex_label_h: Callable[[str], Hashable] | None = None,
    dart_label_h: Callable[[str], Hashable] | None = None,
    budget: int = 200_000,
) -> Iterator[Isomorphism]:
    """All label-preserving isomorphisms ``G -> H`` (lazily).

    ``*_h`` labellings default to the ones given for ``G``.  ``budget`` caps
    the number of search nodes.
    """
    if not _prefilter(G, H):
        return
    vertex_label_h = vertex_label_h or vertex_label
    dart_label_h = dart_label_h or dart_label
    codes: dict = {}
    A = _Prepared(G, vertex_label, dart_label, codes)
    B = _Prepared(H, vertex_label_h, dart_label_h, codes)
    if Counter(A.pair) != Counter(B.pair):
        return
    box = [budget]
    for phi in _search(A, B, list(A.vcode), list(B.vcode), box):
        vmap = {G.vertices[v]: H.vertices[phi[v]] for v in range(G.n)}
        yield Isomorphism(vmap, _dart_bijection(A, B, phi))


def find_isomorphism(G: DartGraph, H: DartGraph, **kw) -> Isomorphism | None:
    return next(iter_isomorphisms(G, H, **kw), None)


def is_isomorphic(G: DartGraph, H: DartGraph, **kw) -> dict[str, str] | None:
    """A vertex bijection ``G -> H`` preserving adjacency with multiplicity, or None."""
    iso = find_isomorphism(G, H, **kw)
    return None if iso is None else iso.vertex_map


def automorphisms(G: DartGraph, max_vertices: int = 50, budget: int = 200_000, **kw) -> list[dict[str, str]]:
    """The full automorphism group as a list of vertex bijections."""
    if G.n > max_vertices:
        raise BudgetExceeded(f"automorphism listing is limited to {max_vertices} vertices")
    seen = []
    keys = set()
    for iso in iter_isomorphisms(G, G, budget=budget, **kw):
        key = tuple(iso.vertex_map[v] for v in G.vertices)
        if key not in keys:
            keys.add(key)
            seen.append(iso.vertex_map)
    return seen
