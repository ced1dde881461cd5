"""Dart-based multigraphs.

Every edge ``e`` with ends ``(a, b)`` owns two darts: ``e+`` directed from
``a`` to ``b`` and ``e-`` directed from ``b`` to ``a``.  Loops are edges with
equal ends, so both of their darts sit at the same vertex.  Internally darts
are indexed ``2*i`` and ``2*i + 1`` for the ``i``-th edge, which makes the
inverse involution a single xor.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
import math
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


class DartGraph:
    """Immutable multigraph with darts as first-class objects."""

    __slots__ = (
        "vertices", "edges", "ends", "_vindex", "_eindex", "_dindex",
        "darts", "_head", "_out",
    )

    def __init__(self, vertices: Sequence[str], edges: Sequence[tuple[str, str, str]]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self._vindex = {}
        for i, v in enumerate(self.vertices):
            if v in self._vindex:
                raise GraphError(f"duplicate vertex id {v!r}")
            self._vindex[v] = i
        ids = []
        ends = []
        self._eindex = {}
        for eid, a, b in edges:
            if eid in self._eindex:
                raise GraphError(f"duplicate edge id {eid!r}")
            for x in (a, b):
                if x not in self._vindex:
                    raise GraphError(f"edge {eid!r} references unknown vertex {x!r}")
            self._eindex[eid] = len(ids)
            ids.append(eid)
            ends.append((a, b))
        self.edges: tuple[str, ...] = tuple(ids)
        self.ends: tuple[tuple[str, str], ...] = tuple(ends)
        darts = []
        head = []
        out: list[list[int]] = [[] for _ in self.vertices]
        for i, (a, b) in enumerate(ends):
            ia, ib = self._vindex[a], self._vindex[b]
            darts.append(ids[i] + "+")
            darts.append(ids[i] + "-")
            head.append(ib)
            head.append(ia)
            out[ia].append(2 * i)
            out[ib].append(2 * i + 1)
        self.darts: tuple[str, ...] = tuple(darts)
        self._dindex = {d: i for i, d in enumerate(darts)}
        self._head = head
        self._out = [tuple(o) for o in out]

    # --- index level (used by the algorithms) ---------------------------
    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vi(self, v: str) -> int:
        try:
            return self._vindex[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def ei(self, e: str) -> int:
        try:
            return self._eindex[e]
        except KeyError:
            raise GraphError(f"unknown edge {e!r}") from None

    def di(self, x: str) -> int:
        try:
            return self._dindex[x]
        except KeyError:
            raise GraphError(f"unknown dart {x!r}") from None

    def head_i(self, x: int) -> int:
        return self._head[x]

    def tail_i(self, x: int) -> int:
        return self._head[x ^ 1]

    def out_i(self, v: int) -> tuple[int, ...]:
        """Darts with tail ``v`` (a loop contributes both of its darts)."""
        return self._out[v]

    def ends_i(self, e: int) -> tuple[int, int]:
        return self._head[2 * e + 1], self._head[2 * e]

    # --- id level -------------------------------------------------------
    def head(self, x: str) -> str:
        return self.vertices[self._head[self.di(x)]]

    def tail(self, x: str) -> str:
        return self.vertices[self._head[self.di(x) ^ 1]]

    def inv(self, x: str) -> str:
        return self.darts[self.di(x) ^ 1]

    def edge_of(self, x: str) -> str:
        return self.edges[self.di(x) >> 1]

    def darts_at(self, v: str) -> list[str]:
        return [self.darts[x] for x in self._out[self.vi(v)]]

    def degree(self, v: str) -> int:
        return len(self._out[self.vi(v)])

    def degrees(self) -> list[int]:
        return [len(o) for o in self._out]

    def neighbors(self, v: str) -> list[str]:
        return [self.vertices[self._head[x]] for x in self._out[self.vi(v)]]

    def is_loop(self, e: str) -> bool:
        a, b = self.ends[self.ei(e)]
        return a == b

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.ends)

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self.ends:
            if a == b:
                return False
            key = frozenset((a, b))
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_regular(self, k: int | None = None) -> bool:
        degs = set(self.degrees())
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return k is None or degs == {k}

    def edges_at(self, v: str) -> list[str]:
        """Edges incident with ``v`` in dart order, loops listed once."""
        seen = []
        for x in self._out[self.vi(v)]:
            e = self.edges[x >> 1]
            if e not in seen:
                seen.append(e)
        return seen

    def __eq__(self, other):
        if not isinstance(other, DartGraph):
            return NotImplemented
        return (self.vertices == other.vertices and self.edges == other.edges
                and self.ends == other.ends)

    def __hash__(self):
        return hash((self.vertices, self.edges, self.ends))

    def __repr__(self):
        return f"DartGraph(n={self.n}, m={self.m})"


def build_graph(vertices: Iterable, edges: Iterable, edge_ids: Iterable[str] | None = None) -> DartGraph:
    """Build a graph from a vertex list and a list of end pairs.

    Vertex ids are converted to strings.  Edge ids default to ``e1, e2, ...``
    in input order.
    """
    vs = [str(v) for v in vertices]
    pairs = [(str(a), str(b)) for a, b in edges]
    if edge_ids is None:
        ids = [f"e{i + 1}" for i in range(len(pairs))]
    else:
        ids = [str(e) for e in edge_ids]
        if len(ids) != len(pairs):
            raise GraphError("edge id list and edge list differ in length")
    return DartGraph(vs, [(e, a, b) for e, (a, b) in zip(ids, pairs)])


def components(G: DartGraph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for x in G.out_i(u):
                w = G.head_i(x)
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(G: DartGraph) -> bool:
    return len(components(G)) <= 1


def betti(G: DartGraph) -> int:
    """Cycle rank |E| - |V| + number of components."""
    return G.m - G.n + len(components(G))


def is_forest(G: DartGraph) -> bool:
    return betti(G) == 0


def bipartition(G: DartGraph) -> list[int] | None:
    """Two-coloring of the vertices as a list of 0/1, or None."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for x in G.out_i(u):
                w = G.head_i(x)
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def is_bipartite(G: DartGraph) -> bool:
    return bipartition(G) is not None


def girth(G: DartGraph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    if G.has_loops():
        return 1
    if not G.is_simple():
        return 2
    best = math.inf
    n = G.n
    for s in range(n):
        dist = [-1] * n
        via = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for x in G.out_i(u):
                if (x ^ 1) == via[u]:
                    continue
                w = G.head_i(x)
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    via[w] = x
                    queue.append(w)
                else:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


@dataclass
class SpanningTree:
    """BFS spanning tree.  ``parent_dart[v]`` points from the parent toward ``v``."""

    graph: DartGraph
    root: str
    tree_edges: frozenset[str]
    parent_dart: dict[str, str]
    order: list[str] = field(default_factory=list)

    def path(self, w: str) -> list[str]:
        """Darts of the tree path from the root to ``w``."""
        seq = []
        while w != self.root:
            x = self.parent_dart[w]
            seq.append(x)
            w = self.graph.tail(x)
        seq.reverse()
        return seq

    def cotree_edges(self) -> list[str]:
        return [e for e in self.graph.edges if e not in self.tree_edges]


def spanning_tree(G: DartGraph, root: str | None = None) -> SpanningTree:
    """Deterministic BFS tree; vertices and darts are explored in input order."""
    if G.n == 0:
        raise GraphError("empty graph has no spanning tree")
    if root is None:
        root = G.vertices[0]
    r = G.vi(root)
    parent: dict[str, str] = {}
    tree = set()
    seen = [False] * G.n
    seen[r] = True
    order = [root]
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for x in G.out_i(u):
            w = G.head_i(x)
            if not seen[w]:
                seen[w] = True
                parent[G.vertices[w]] = G.darts[x]
                tree.add(G.edges[x >> 1])
                order.append(G.vertices[w])
                queue.append(w)
    if len(order) != G.n:
        raise GraphError("graph is disconnected")
    return SpanningTree(G, root, frozenset(tree), parent, order)
