"""Kneser graphs, odd graphs and the canonical strong colouring.

Colours of a strong (2k-1)-colouring are identified with elements of the
ground set ``{1, ..., 2k-1}``, so a derived vertex colour is literally a
vertex of the odd graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import DartGraph, GraphError, build_graph
from .strong import EdgeColoring


@dataclass(frozen=True, order=True)
class KneserVertex:
    subset: tuple[int, ...]
    m: int

    def __post_init__(self):
        s = self.subset
        if list(s) != sorted(set(s)) or (s and (s[0] < 1 or s[-1] > self.m)):
            raise ValueError(f"invalid subset {s} of 1..{self.m}")

    @property
    def id(self) -> str:
        return vertex_id(self.subset)

    @classmethod
    def parse(cls, vid: str, m: int) -> "KneserVertex":
        return cls(parse_vertex_id(vid), m)


def vertex_id(subset) -> str:
    return "-".join(str(x) for x in sorted(subset))


def parse_vertex_id(vid: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in vid.split("-"))
    except ValueError:
        raise GraphError(f"{vid!r} is not a Kneser vertex id") from None


def edge_id(u, v) -> str:
    a, b = sorted((tuple(sorted(u)), tuple(sorted(v))))
    return f"{vertex_id(a)}|{vertex_id(b)}"


@lru_cache(maxsize=None)
def kneser_graph(m: int, n: int) -> DartGraph:
    """K(m, n): n-subsets of {1..m}, adjacent when disjoint.

    ``n = 1`` is accepted and gives the complete graph K_m.
    """
    if n < 1 or m < 2 * n + 1:
        raise ValueError(f"K({m},{n}) needs n >= 1 and m >= 2n+1")
    subsets = list(combinations(range(1, m + 1), n))
    edges = []
    ids = []
    for i, u in enumerate(subsets):
        su = set(u)
        for v in subsets[i + 1:]:
            if su.isdisjoint(v):
                edges.append((vertex_id(u), vertex_id(v)))
                ids.append(edge_id(u, v))
    return build_graph([vertex_id(s) for s in subsets], edges, ids)


def odd_graph(k: int) -> DartGraph:
    if k < 3:
        raise ValueError("odd graphs are defined here for k >= 3")
    return kneser_graph(2 * k - 1, k - 1)


def canonical_coloring(k: int) -> EdgeColoring:
    """Colour edge uv of O_k by the ground-set element missing from u and v."""
    G = odd_graph(k)
    ground = set(range(1, 2 * k))
    colors = {}
    for e, (a, b) in zip(G.edges, G.ends):
        (c,) = ground - set(parse_vertex_id(a)) - set(parse_vertex_id(b))
        colors[e] = c
    return EdgeColoring(2 * k - 1, colors)


@dataclass
class DerivedVertexColoring:
    assignment: dict[str, frozenset[int]]
    k: int

    def as_kneser(self, v: str) -> KneserVertex:
        return KneserVertex(tuple(sorted(self.assignment[v])), 2 * self.k - 1)


def derived_vertex_coloring(G: DartGraph, sigma: EdgeColoring, k: int) -> DerivedVertexColoring:
    """Label each vertex with the (k-1)-set of colours absent at it."""
    if not G.is_regular(k):
        raise ValueError(f"graph is not {k}-regular")
    if sigma.palette != 2 * k - 1:
        raise ValueError(f"palette must be 1..{2 * k - 1}, got {sigma.palette}")
    ground = frozenset(range(1, 2 * k))
    out = {}
    for v in G.vertices:
        seen = [sigma.colors[G.edge_of(x)] for x in G.darts_at(v)]
        if len(set(seen)) != len(seen):
            raise ValueError(f"colour repeated at vertex {v!r}")
        if not set(seen) <= ground:
            raise ValueError(f"colour outside 1..{2 * k - 1} at vertex {v!r}")
        out[v] = ground - set(seen)
    return DerivedVertexColoring(out, k)


def reconstruct_coloring(G: DartGraph, derived: DerivedVertexColoring) -> EdgeColoring:
    k = derived.k
    ground = frozenset(range(1, 2 * k))
    colors = {}
    for e, (a, b) in zip(G.edges, G.ends):
        A, B = derived.assignment[a], derived.assignment[b]
        if A & B:
            raise ValueError(f"edge {e!r}: vertex colour sets intersect")
        rest = ground - A - B
        if len(rest) != 1:
            raise ValueError(f"edge {e!r}: expected one free colour, found {len(rest)}")
        colors[e] = next(iter(rest))
    return EdgeColoring(2 * k - 1, colors)
