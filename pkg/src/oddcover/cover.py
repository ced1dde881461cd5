"""Covering projections between dart graphs.

A covering projection is a pair of maps (vertices, darts) that commutes with
inversion and heads and is bijective on the darts at every vertex.  This
module builds the cover onto the odd graph induced by a strong
(2k-1)-colouring and decides equivalence of colourings and of covers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import DartGraph, GraphError, SpanningTree, is_connected, spanning_tree
from .graphio import graph_from_obj, graph_to_obj
from .iso import Isomorphism, find_isomorphism
from .strong import EdgeColoring, is_strong


@dataclass
class CoveringMap:
    source: DartGraph
    target: DartGraph
    vertex_map: dict[str, str]
    dart_map: dict[str, str]

    def edge_image(self, e: str) -> str:
        return self.target.edge_of(self.dart_map[e + "+"])

    def then(self, g: "CoveringMap") -> "CoveringMap":
        """Composition: first ``self``, then ``g``."""
        return CoveringMap(
            self.source, g.target,
            {v: g.vertex_map[w] for v, w in self.vertex_map.items()},
            {x: g.dart_map[y] for x, y in self.dart_map.items()},
        )

    def to_obj(self) -> dict:
        return {
            "source": graph_to_obj(self.source),
            "target": graph_to_obj(self.target),
            "vertex_map": dict(self.vertex_map),
            "dart_map": dict(self.dart_map),
        }

    @classmethod
    def from_obj(cls, obj) -> "CoveringMap":
        try:
            return cls(graph_from_obj(obj["source"]), graph_from_obj(obj["target"]),
                       {str(k): str(v) for k, v in obj["vertex_map"].items()},
                       {str(k): str(v) for k, v in obj["dart_map"].items()})
        except (KeyError, AttributeError, TypeError) as exc:
            raise GraphError(f"malformed cover JSON: {exc}") from None


def identity_cover(G: DartGraph) -> CoveringMap:
    return CoveringMap(G, G, {v: v for v in G.vertices}, {x: x for x in G.darts})


def verify_cover(f: CoveringMap) -> tuple[bool, str]:
    """Check every covering condition; the reason names the first failure."""
    S, T = f.source, f.target
    tv = set(T.vertices)
    td = set(T.darts)
    for v in S.vertices:
        if f.vertex_map.get(v) not in tv:
            return False, f"vertex {v!r} has no image in the target"
    for x in S.darts:
        if f.dart_map.get(x) not in td:
            return False, f"dart {x!r} has no image in the target"
    for x in S.darts:
        y = f.dart_map[x]
        if f.dart_map[S.inv(x)] != T.inv(y):
            return False, f"dart map does not commute with inversion at {x!r}"
        if T.head(y) != f.vertex_map[S.head(x)]:
            return False, f"head of image of {x!r} differs from image of its head"
    for v in S.vertices:
        images = [f.dart_map[x] for x in S.darts_at(v)]
        star = T.darts_at(f.vertex_map[v])
        if len(images) != len(star) or set(images) != set(star):
            return False, f"darts at {v!r} are not mapped bijectively onto the darts at its image"
    if set(f.vertex_map[v] for v in S.vertices) != tv:
        return False, "vertex map is not surjective"
    if not is_connected(T):
        return False, "target is disconnected"
    return True, "ok"


def fold_count(f: CoveringMap) -> int:
    ok, reason = verify_cover(f)
    if not ok:
        raise GraphError(f"not a covering projection: {reason}")
    vf: dict[str, int] = {}
    for v in f.source.vertices:
        w = f.vertex_map[v]
        vf[w] = vf.get(w, 0) + 1
    ef: dict[str, int] = {}
    for e in f.source.edges:
        t = f.edge_image(e)
        ef[t] = ef.get(t, 0) + 1
    sizes = set(vf.values()) | set(ef.values())
    if len(sizes) != 1 or set(ef) != set(f.target.edges):
        raise GraphError(f"fibres have unequal sizes {sorted(sizes)}")
    return sizes.pop()


def cover_from_strong_coloring(G: DartGraph, sigma: EdgeColoring, k: int) -> CoveringMap:
    """The cover ``G -> O_k`` sending each vertex to its set of absent colours."""
    from .kneser import canonical_coloring, derived_vertex_coloring, odd_graph

    if not G.is_simple():
        raise GraphError("cover_from_strong_coloring needs a simple graph")
    if not is_connected(G):
        raise GraphError("cover_from_strong_coloring needs a connected graph")
    if not G.is_regular(k):
        raise GraphError(f"graph is not {k}-regular")
    if sigma.palette != 2 * k - 1:
        raise GraphError(f"palette must be exactly 1..{2 * k - 1}")
    if not is_strong(G, sigma):
        raise GraphError("coloring is not strong")
    target = odd_graph(k)
    canon = canonical_coloring(k)
    derived = derived_vertex_coloring(G, sigma, k)
    by_color = {w: {canon.colors[target.edge_of(y)]: y for y in target.darts_at(w)}
                for w in target.vertices}
    vmap = {v: derived.as_kneser(v).id for v in G.vertices}
    dmap = {}
    for x in G.darts:
        dmap[x] = by_color[vmap[G.tail(x)]][sigma.colors[G.edge_of(x)]]
    f = CoveringMap(G, target, vmap, dmap)
    ok, reason = verify_cover(f)
    assert ok, f"cover construction failed: {reason}"
    return f


def colorings_equivalent(G: DartGraph, sigma: EdgeColoring, tau: EdgeColoring,
                         budget: int = 200_000) -> Isomorphism | None:
    """An automorphism ``alpha`` with ``tau(e) == sigma(alpha(e))`` for all edges, or None."""
    return find_isomorphism(
        G, G,
        dart_label=lambda x: tau.colors[G.edge_of(x)],
        dart_label_h=lambda x: sigma.colors[G.edge_of(x)],
        budget=budget,
    )


def _lift_index(f: CoveringMap) -> dict[tuple[str, str], str]:
    """(source vertex, base dart at its image) -> the unique source dart lifting it."""
    S = f.source
    return {(S.tail(x), f.dart_map[x]): x for x in S.darts}


def fiber_labels(f: CoveringMap, T: SpanningTree | None = None,
                 basepoint_order: list[str] | None = None) -> dict[str, tuple[str, int]]:
    """Label each source vertex ``(base vertex, i)`` by lifting ``T`` from the root fibre."""
    base = f.target
    if T is None:
        T = spanning_tree(base)
    r = T.root
    fiber = [v for v in f.source.vertices if f.vertex_map[v] == r]
    if basepoint_order is not None:
        if sorted(basepoint_order) != sorted(fiber):
            raise GraphError("basepoint order is not a permutation of the root fibre")
        fiber = list(basepoint_order)
    lift = _lift_index(f)
    label = {v: (r, i + 1) for i, v in enumerate(fiber)}
    at: dict[str, list[str]] = {r: fiber}
    for w in T.order[1:]:
        p = T.parent_dart[w]
        u = base.tail(p)
        over = []
        for s in at[u]:
            y = lift[(s, p)]
            h = f.source.head(y)
            label[h] = (w, label[s][1])
            over.append(h)
        at[w] = over
    if len(label) != f.source.n:
        raise GraphError("source vertices not reached by lifting the spanning tree")
    return label


def voltage_from_cover(f: CoveringMap, T: SpanningTree | None = None,
                       basepoint_order: list[str] | None = None):
    """Permutation voltages on the target whose natural projection is equivalent to ``f``.

    Tree darts receive the identity, so the result is already reduced
    with respect to ``T``.
    """
    from .voltage import Perm, VoltageAssignment

    ok, reason = verify_cover(f)
    if not ok:
        raise GraphError(f"not a covering projection: {reason}")
    base = f.target
    if T is None:
        T = spanning_tree(base)
    d = fold_count(f)
    label = fiber_labels(f, T, basepoint_order)
    vertex_at = {lab: v for v, lab in label.items()}
    lift = _lift_index(f)
    volts = {}
    for idx in range(0, 2 * base.m, 2):
        x = base.darts[idx]
        u = base.tail(x)
        images = []
        for i in range(1, d + 1):
            y = lift[(vertex_at[(u, i)], x)]
            images.append(label[f.source.head(y)][1])
        volts[x] = Perm(tuple(images))
    return VoltageAssignment.from_partial(base, d, volts)


def covers_equivalent_direct(f1: CoveringMap, f2: CoveringMap,
                             T: SpanningTree | None = None) -> Isomorphism | None:
    """An isomorphism ``xi: source(f2) -> source(f1)`` with ``f2 = f1 . xi``, or None.

    Decided through the reduced voltage assignments of both covers.
    """
    from .voltage import covers_equivalent_voltage

    if f1.target != f2.target:
        raise GraphError("covers have different targets")
    base = f1.target
    if T is None:
        T = spanning_tree(base)
    if fold_count(f1) != fold_count(f2):
        return None
    k1 = voltage_from_cover(f1, T)
    k2 = voltage_from_cover(f2, T)
    g = covers_equivalent_voltage(k1, k2, T)
    if g is None:
        return None
    lab1 = fiber_labels(f1, T)
    lab2 = fiber_labels(f2, T)
    at1 = {lab: v for v, lab in lab1.items()}
    vmap = {}
    for v, (w, i) in lab2.items():
        vmap[v] = at1[(w, g.apply(i))]
    lift1 = _lift_index(f1)
    dmap = {}
    for x in f2.source.darts:
        dmap[x] = lift1[(vmap[f2.source.tail(x)], f2.dart_map[x])]
    xi = Isomorphism(vmap, dmap)
    assert all(f1.vertex_map[vmap[v]] == f2.vertex_map[v] for v in vmap)
    assert all(f1.dart_map[dmap[x]] == f2.dart_map[x] for x in dmap)
    assert all(f1.source.head(dmap[x]) == vmap[f2.source.head(x)] for x in dmap)
    return xi


def covers_equivalent_search(f1: CoveringMap, f2: CoveringMap, budget: int = 200_000) -> Isomorphism | None:
    """Fibre-respecting isomorphism search; an independent check of the voltage route."""
    if f1.target != f2.target:
        raise GraphError("covers have different targets")
    return find_isomorphism(
        f2.source, f1.source,
        vertex_label=f2.vertex_map.__getitem__, dart_label=f2.dart_map.__getitem__,
        vertex_label_h=f1.vertex_map.__getitem__, dart_label_h=f1.dart_map.__getitem__,
        budget=budget,
    )


def find_cover_onto(G: DartGraph, target: DartGraph, node_limit: int = 1_000_000) -> CoveringMap | None:
    """Direct backtracking search for a covering projection between simple graphs."""
    if not (G.is_simple() and target.is_simple()):
        raise GraphError("direct cover search handles simple graphs only")
    if G.n == 0 or not is_connected(G) or not is_connected(target):
        return None
    if G.n % target.n:
        return None
    order = spanning_tree(G).order
    nbrs = {v: set(G.neighbors(v)) for v in G.vertices}
    tn = {w: set(target.neighbors(w)) for w in target.vertices}
    vmap: dict[str, str] = {}
    nodes = [0]

    def consistent(v, w):
        if G.degree(v) != target.degree(w):
            return False
        for u in nbrs[v]:
            if u in vmap:
                if vmap[u] not in tn[w]:
                    return False
                # images of the mapped neighbours of u must stay distinct
                for z in nbrs[u]:
                    if z != v and z in vmap and vmap[z] == w:
                        return False
        seen = set()
        for u in nbrs[v]:
            if u in vmap:
                if vmap[u] in seen:
                    return False
                seen.add(vmap[u])
        return True

    def rec(i):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise GraphError("direct cover search budget exhausted")
        if i == len(order):
            return True
        v = order[i]
        for w in target.vertices:
            if consistent(v, w):
                vmap[v] = w
                if rec(i + 1):
                    return True
                del vmap[v]
        return False

    if not rec(0):
        return None
    dmap = {}
    for x in G.darts:
        a, b = vmap[G.tail(x)], vmap[G.head(x)]
        (y,) = [y for y in target.darts_at(a) if target.head(y) == b]
        dmap[x] = y
    f = CoveringMap(G, target, dict(vmap), dmap)
    ok, reason = verify_cover(f)
    assert ok, reason
    return f
