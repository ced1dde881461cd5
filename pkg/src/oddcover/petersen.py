"""Petersen colourings, normal colourings and the four-way equivalence for cubic graphs.

Edges of the Petersen graph are pairs of disjoint 2-subsets of {1..5}; the
colour of such an edge under the canonical colouring is the missing element.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cover import CoveringMap, cover_from_strong_coloring, find_cover_onto, verify_cover
from .graph import DartGraph, GraphError
from .kneser import canonical_coloring, edge_id, odd_graph, parse_vertex_id, vertex_id
from .strong import (ColoringError, EdgeColoring, SearchTimeout, edge_class, has_strong_coloring,
                     is_normal, is_proper, is_strong)

GROUND = frozenset(range(1, 6))


@dataclass
class PetersenColoring:
    source: DartGraph
    edge_map: dict[str, str]

    def to_obj(self) -> dict:
        return {"edge_map": dict(self.edge_map)}

    @classmethod
    def from_obj(cls, G: DartGraph, obj) -> "PetersenColoring":
        try:
            return cls(G, {str(k): str(v) for k, v in obj["edge_map"].items()})
        except (KeyError, AttributeError) as exc:
            raise ColoringError(f"malformed Petersen coloring JSON: {exc}") from None


def _require_cubic(G: DartGraph):
    if G.n == 0 or not G.is_regular(3):
        raise GraphError("Petersen colourings are defined for cubic graphs")


def _ends_of(pe: str) -> tuple[frozenset, frozenset]:
    a, b = pe.split("|")
    return frozenset(parse_vertex_id(a)), frozenset(parse_vertex_id(b))


def is_petersen_coloring(G: DartGraph, xi: PetersenColoring) -> bool:
    """Adjacent edges of ``G`` go to adjacent (hence distinct) edges of P."""
    _require_cubic(G)
    P = odd_graph(3)
    pe = set(P.edges)
    if any(xi.edge_map.get(e) not in pe for e in G.edges):
        return False
    for v in G.vertices:
        es = G.edges_at(v)
        if len(es) != 3:
            return False
        for i in range(3):
            for j in range(i + 1, 3):
                a, b = xi.edge_map[es[i]], xi.edge_map[es[j]]
                if a == b or not (set(_ends_of(a)) & set(_ends_of(b))):
                    return False
    return True


def induced_vertex_map(G: DartGraph, xi: PetersenColoring) -> dict[str, str]:
    """Each vertex goes to the common end of its three image edges."""
    out = {}
    for v in G.vertices:
        common = None
        for e in G.edges_at(v):
            ends = set(_ends_of(xi.edge_map[e]))
            common = ends if common is None else common & ends
        assert common and len(common) == 1, f"no common vertex for the star at {v!r}"
        out[v] = vertex_id(next(iter(common)))
    return out


def is_homomorphism(G: DartGraph, xi: PetersenColoring) -> bool:
    if not is_petersen_coloring(G, xi):
        raise ColoringError("not a Petersen coloring")
    P = odd_graph(3)
    vm = induced_vertex_map(G, xi)
    padj = {v: set(P.neighbors(v)) for v in P.vertices}
    return all(vm[b] in padj[vm[a]] for a, b in G.ends)


def cover_from_petersen_hom(G: DartGraph, xi: PetersenColoring) -> CoveringMap:
    """The covering projection determined by a homomorphic Petersen colouring."""
    if not is_homomorphism(G, xi):
        raise ColoringError("Petersen coloring is not a homomorphism")
    P = odd_graph(3)
    vm = induced_vertex_map(G, xi)
    dmap = {}
    for x in G.darts:
        pe = xi.edge_map[G.edge_of(x)]
        t = vm[G.tail(x)]
        y = pe + "+"
        dmap[x] = y if P.tail(y) == t else P.inv(y)
    f = CoveringMap(G, P, vm, dmap)
    ok, reason = verify_cover(f)
    assert ok, reason
    return f


def normal_to_petersen(G: DartGraph, phi: EdgeColoring) -> PetersenColoring:
    """Petersen colouring from a normal 5-colouring.

    For ``e = uv`` of colour ``c`` let ``A``, ``B`` be the other colours at
    ``u`` and ``v``.  A rich edge goes to the P-edge ``A - B``; a poor edge
    (``A == B``) goes to ``A - D`` with ``D`` the complement of ``{c} | A``.
    """
    _require_cubic(G)
    if not is_normal(G, phi):
        raise ColoringError("coloring is not normal")
    emap = {}
    for e, (u, v) in zip(G.edges, G.ends):
        c = phi.colors[e]
        A = frozenset(phi.colors[f] for f in G.edges_at(u) if f != e)
        B = frozenset(phi.colors[f] for f in G.edges_at(v) if f != e)
        if not A & B:
            emap[e] = edge_id(A, B)
        elif A == B:
            emap[e] = edge_id(A, GROUND - A - {c})
        else:  # pragma: no cover - excluded by normality
            raise AssertionError("edge is neither rich nor poor")
    xi = PetersenColoring(G, emap)
    if not is_petersen_coloring(G, xi):
        raise AssertionError("normal-to-Petersen construction produced an invalid map")
    return xi


def petersen_from_cover(f: CoveringMap) -> PetersenColoring:
    ok, reason = verify_cover(f)
    if not ok:
        raise GraphError(f"not a covering projection: {reason}")
    if f.target != odd_graph(3):
        raise GraphError("target is not the Petersen graph K(5,2)")
    return PetersenColoring(f.source, {e: f.edge_image(e) for e in f.source.edges})


def strong5_from_petersen_hom(G: DartGraph, xi: PetersenColoring) -> EdgeColoring:
    if not is_homomorphism(G, xi):
        raise ColoringError("Petersen coloring is not a homomorphism")
    sigma = canonical_coloring(3)
    phi = EdgeColoring(5, {e: sigma.colors[xi.edge_map[e]] for e in G.edges})
    assert is_strong(G, phi)
    return phi


@dataclass
class EquivalenceReport:
    strong5: bool | None
    covers_petersen: bool | None
    normal_all_rich: bool | None
    petersen_hom: bool | None
    witnesses: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def verdicts(self) -> list:
        return [self.strong5, self.covers_petersen, self.normal_all_rich, self.petersen_hom]

    @property
    def inconclusive(self) -> bool:
        return any(v is None for v in self.verdicts)

    def to_obj(self) -> dict:
        return {
            "i_chi_strong_is_5": self.strong5,
            "ii_covers_petersen": self.covers_petersen,
            "iii_normal_all_rich": self.normal_all_rich,
            "iv_petersen_homomorphism": self.petersen_hom,
            "inconclusive": self.inconclusive,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }


def equivalence_report(G: DartGraph, node_limit: int | None = None, time_limit: float | None = None,
                       direct_cover_limit: int = 40) -> EquivalenceReport:
    """Evaluate the four equivalent statements for a cubic graph.

    (i) comes from the exact solver; (ii)-(iv) are derived from its witness.
    For graphs with at most ``direct_cover_limit`` vertices, (ii) is also
    checked by a direct cover search that does not use colourings.
    """
    _require_cubic(G)
    try:
        exists, phi = has_strong_coloring(G, 5, node_limit=node_limit, time_limit=time_limit)
    except SearchTimeout:
        return EquivalenceReport(None, None, None, None, notes=["solver budget exhausted"])
    notes = []
    if G.has_loops():
        exists = False
    rep = EquivalenceReport(exists, exists, exists, exists, notes=notes)
    if exists:
        f = cover_from_strong_coloring(G, phi, 3)
        rich = is_normal(G, phi) and all(edge_class(G, phi, e) == "rich" for e in G.edges)
        xi = petersen_from_cover(f)
        hom = is_homomorphism(G, xi)
        rep.covers_petersen = verify_cover(f)[0]
        rep.normal_all_rich = rich
        rep.petersen_hom = hom
        rep.witnesses = {"coloring": phi.to_obj(), "cover_vertex_map": f.vertex_map,
                         "petersen_coloring": xi.to_obj()}
    if G.is_simple() and G.n <= direct_cover_limit:
        direct = find_cover_onto(G, odd_graph(3)) is not None
        notes.append(f"direct cover search: {direct}")
        if direct != rep.covers_petersen:
            raise AssertionError("direct cover search disagrees with the solver")
    assert len(set(rep.verdicts)) == 1, f"statements disagree: {rep.verdicts}"
    return rep
