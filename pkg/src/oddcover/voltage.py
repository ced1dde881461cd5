"""Permutation voltage assignments and their derived graphs.

Permutations act on the right: ``(i)p`` is ``p.apply(i)`` and the product
``p * q`` applies ``p`` first.  A lifted dart ``(x, i)`` runs from
``(tail x, i)`` to ``(head x, (i)kappa_x)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
import logging
import math
import time

from .cover import CoveringMap, verify_cover
from .graph import (DartGraph, GraphError, SpanningTree, betti, girth, is_bipartite,
                    is_connected, spanning_tree)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{list(self.images)} is not a permutation of 1..{len(self.images)}")

    @property
    def d(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, d: int) -> "Perm":
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def from_cycles(cls, d: int, cycles) -> "Perm":
        img = list(range(1, d + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    def apply(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return perm_compose(self, other)

    def inverse(self) -> "Perm":
        return perm_inverse(self)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def to_list(self) -> list[int]:
        return list(self.images)


def perm_compose(p: Perm, q: Perm) -> Perm:
    """``(i)(p q) = ((i)p)q``."""
    if p.d != q.d:
        raise ValueError(f"degree mismatch {p.d} != {q.d}")
    return Perm(tuple(q.images[p.images[i] - 1] for i in range(p.d)))


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * p.d
    for i, v in enumerate(p.images):
        inv[v - 1] = i + 1
    return Perm(tuple(inv))


def cycle_type(p: Perm) -> list[int]:
    """Sorted cycle lengths, fixed points included."""
    seen = [False] * p.d
    lengths = []
    for s in range(p.d):
        if seen[s]:
            continue
        n = 0
        i = s
        while not seen[i]:
            seen[i] = True
            i = p.images[i] - 1
            n += 1
        lengths.append(n)
    return sorted(lengths)


def is_involution(p: Perm) -> bool:
    """``p * p`` is the identity (the identity itself counts)."""
    return (p * p).is_identity()


def conjugate(g: Perm, p: Perm) -> Perm:
    """``g p g^-1``."""
    return g * p * g.inverse()


@dataclass
class VoltageAssignment:
    base: DartGraph
    d: int
    voltages: dict[str, Perm]

    def __post_init__(self):
        for x in self.base.darts:
            p = self.voltages.get(x)
            if p is None:
                raise ValueError(f"dart {x!r} has no voltage")
            if p.d != self.d:
                raise ValueError(f"voltage on {x!r} has degree {p.d}, expected {self.d}")
            if self.voltages[self.base.inv(x)] != p.inverse():
                raise ValueError(f"voltages on {x!r} and its inverse are not inverse")

    @classmethod
    def from_partial(cls, base: DartGraph, d: int, given: dict[str, Perm]) -> "VoltageAssignment":
        """Fill in inverse darts and identities for unnamed darts."""
        volts: dict[str, Perm] = {}
        for x, p in given.items():
            y = base.inv(x)
            if y in given and given[y] != p.inverse():
                raise ValueError(f"inconsistent voltages on {x!r} and {y!r}")
            volts[x] = p
            volts[y] = p.inverse()
        for x in base.darts:
            volts.setdefault(x, Perm.identity(d))
        return cls(base, d, volts)

    @classmethod
    def trivial(cls, base: DartGraph, d: int) -> "VoltageAssignment":
        return cls.from_partial(base, d, {})

    def conjugated(self, g: Perm) -> "VoltageAssignment":
        return VoltageAssignment(self.base, self.d, {x: conjugate(g, p) for x, p in self.voltages.items()})

    def to_obj(self) -> dict:
        return {"d": self.d,
                "voltages": {x: self.voltages[x].to_list() for x in self.base.darts[::2]}}

    @classmethod
    def from_obj(cls, base: DartGraph, obj) -> "VoltageAssignment":
        try:
            d = int(obj["d"])
            given = {}
            for x, img in obj["voltages"].items():
                base.di(x)
                given[x] = Perm(tuple(int(i) for i in img))
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed voltage JSON: {exc}") from None
        return cls.from_partial(base, d, given)


def lift_vertex(v: str, i: int) -> str:
    return f"{v}:{i}"


def derived_lift(kappa: VoltageAssignment) -> tuple[DartGraph, CoveringMap]:
    """The derived graph and its natural projection onto the base."""
    B, d = kappa.base, kappa.d
    vertices = [lift_vertex(v, i) for v in B.vertices for i in range(1, d + 1)]
    edges = []
    for e, (a, b) in zip(B.edges, B.ends):
        p = kappa.voltages[e + "+"]
        for i in range(1, d + 1):
            edges.append((f"{e}:{i}", lift_vertex(a, i), lift_vertex(b, p.apply(i))))
    L = DartGraph(vertices, edges)
    vmap = {lift_vertex(v, i): v for v in B.vertices for i in range(1, d + 1)}
    dmap = {}
    for e in B.edges:
        for i in range(1, d + 1):
            dmap[f"{e}:{i}+"] = e + "+"
            dmap[f"{e}:{i}-"] = e + "-"
    return L, CoveringMap(L, B, vmap, dmap)


def _tree_products(kappa: VoltageAssignment, T: SpanningTree) -> dict[str, Perm]:
    pi = {T.root: Perm.identity(kappa.d)}
    for w in T.order[1:]:
        x = T.parent_dart[w]
        pi[w] = pi[kappa.base.tail(x)] * kappa.voltages[x]
    return pi


def t_reduction(kappa: VoltageAssignment, T: SpanningTree | None = None,
                root: str | None = None) -> VoltageAssignment:
    """The (T, r)-reduction: walk products along ``T(u) z T(v)^-1`` on cotree darts."""
    B = kappa.base
    if T is None:
        T = spanning_tree(B, root)
    elif root is not None and root != T.root:
        raise GraphError("spanning tree is rooted elsewhere")
    pi = _tree_products(kappa, T)
    given = {}
    for e in T.cotree_edges():
        z = e + "+"
        given[z] = pi[B.tail(z)] * kappa.voltages[z] * pi[B.head(z)].inverse()
    return VoltageAssignment.from_partial(B, kappa.d, given)


def is_transitive(generators: list[Perm], d: int) -> bool:
    """Orbit of 1 under the generated group is all of 1..d."""
    for g in generators:
        if g.d != d:
            raise ValueError("degree mismatch among generators")
    orbit = {1}
    frontier = [1]
    while frontier:
        i = frontier.pop()
        for g in generators:
            for j in (g.apply(i), g.inverse().apply(i)):
                if j not in orbit:
                    orbit.add(j)
                    frontier.append(j)
    return len(orbit) == d


def lift_connected(kappa: VoltageAssignment, T: SpanningTree | None = None) -> bool:
    if not is_connected(kappa.base):
        raise GraphError("base graph is disconnected")
    if T is None:
        T = spanning_tree(kappa.base)
    red = t_reduction(kappa, T)
    return is_transitive([red.voltages[e + "+"] for e in T.cotree_edges()], kappa.d)


def covers_equivalent_voltage(kappa: VoltageAssignment, lam: VoltageAssignment,
                              T: SpanningTree | None = None, root: str | None = None) -> Perm | None:
    """A permutation ``g`` with ``lam'(x) = g kappa'(x) g^-1`` on every cotree dart, or None.

    Scans all of S_d in lexicographic order after a cycle-type filter.
    """
    if kappa.base != lam.base or kappa.d != lam.d:
        raise GraphError("voltage assignments live on different bases or degrees")
    B = kappa.base
    if T is None:
        T = spanning_tree(B, root)
    k1 = t_reduction(kappa, T)
    k2 = t_reduction(lam, T)
    cot = [e + "+" for e in T.cotree_edges()]
    pairs = [(k1.voltages[x], k2.voltages[x]) for x in cot]
    for p, q in pairs:
        if cycle_type(p) != cycle_type(q):
            return None
    d = kappa.d
    # fixed-point-free part first: non-identity pairs prune fastest
    pairs.sort(key=lambda pq: pq[0].is_identity())
    for img in permutations(range(1, d + 1)):
        g = Perm(img)
        gi = g.inverse()
        if all(g * p * gi == q for p, q in pairs):
            return g
    return None


# --------------------------------------------------------------------------
# Z2-homology lifts

@dataclass
class BinaryVoltage:
    base: DartGraph
    beta: int
    voltages: dict[str, tuple[int, ...]]

    def mask(self, e: str) -> int:
        return sum(b << i for i, b in enumerate(self.voltages[e]))

    def to_obj(self) -> dict:
        return {"beta": self.beta, "voltages": {e: list(v) for e, v in self.voltages.items()}}

    def to_permutation(self) -> VoltageAssignment:
        """Regular representation of Z2^beta: group element ``g`` acts by xor with ``g``."""
        d = 1 << self.beta
        given = {}
        for e in self.base.edges:
            m = self.mask(e)
            given[e + "+"] = Perm(tuple((j ^ m) + 1 for j in range(d)))
        return VoltageAssignment.from_partial(self.base, d, given)


MAX_BETA = 12


def homology_voltage(H: DartGraph, T: SpanningTree | None = None) -> BinaryVoltage:
    """The i-th cotree edge gets the i-th standard basis vector; tree edges get zero."""
    if not is_connected(H):
        raise GraphError("homology voltages need a connected graph")
    if T is None:
        T = spanning_tree(H)
    beta = betti(H)
    cot = T.cotree_edges()
    assert len(cot) == beta
    volts = {}
    pos = {e: i for i, e in enumerate(cot)}
    for e in H.edges:
        vec = [0] * beta
        if e in pos:
            vec[pos[e]] = 1
        volts[e] = tuple(vec)
    return BinaryVoltage(H, beta, volts)


def girth_double(H: DartGraph) -> tuple[DartGraph, CoveringMap]:
    """The 2^beta-fold Z2-homology lift of ``H``; verified to have twice the girth."""
    g = girth(H)
    if g == math.inf:
        raise GraphError("forest has infinite girth")
    hv = homology_voltage(H)
    if hv.beta > MAX_BETA:
        raise GraphError(f"cycle rank {hv.beta} exceeds the cap {MAX_BETA}")
    L, proj = derived_lift(hv.to_permutation())
    if not is_connected(L):
        raise AssertionError("homology lift is disconnected")
    if girth(L) != 2 * g:
        raise AssertionError(f"homology lift has girth {girth(L)}, expected {2 * g}")
    if is_bipartite(H) and not is_bipartite(L):
        raise AssertionError("lift of a bipartite graph is not bipartite")
    return L, proj


@dataclass
class Counterexample:
    n: int
    graph: DartGraph
    covers: list[CoveringMap]
    certificate: dict = field(default_factory=dict)
    coloring: object = None

    def cover_to(self, level: int) -> CoveringMap:
        """Composite covering projection ``G_n -> G_level``."""
        f = None
        for g in reversed(self.covers[level - 1:]):
            f = g if f is None else f.then(g)
        return f


def counterexample_family(n: int, with_coloring: bool = True) -> Counterexample:
    """G_1 = theta graph, G_{m+1} = girth_double(G_m), with certificates.

    The certificate records connectivity, bipartiteness, girth 2^n, order a
    power of two (so not a multiple of 10) and, for n >= 2, a strong
    6-colouring lifted from the 3-cube.
    """
    from .named import theta
    from .strong import chi_strong, is_strong, lift_coloring

    if not 1 <= n <= 3:
        raise ValueError("counterexample_family supports 1 <= n <= 3")
    G = theta()
    chain = [G]
    covers: list[CoveringMap] = []
    for _ in range(n - 1):
        G, proj = girth_double(G)
        chain.append(G)
        covers.append(proj)
    order = G.n
    cert = {
        "n": n,
        "order": order,
        "girth": girth(G),
        "girth_expected": 2 ** n,
        "connected": is_connected(G),
        "bipartite": is_bipartite(G),
        "cubic": G.is_regular(3),
        "order_power_of_two": order & (order - 1) == 0,
        "order_multiple_of_10": order % 10 == 0,
    }
    result = Counterexample(n, G, covers, cert)
    if n >= 2 and with_coloring:
        q3 = chain[1]
        base = chi_strong(q3)
        assert base.proof_state == "optimal" and base.chi_strong == 6
        f = result.cover_to(2) if n > 2 else None
        phi = base.witness if f is None else lift_coloring(f, base.witness)
        cert["upper_bound"] = 6 if is_strong(G, phi) and phi.palette == 6 else None
        # orders of covers of the Petersen graph are multiples of 10, so no
        # strong 5-colouring exists and every cubic graph with an edge needs 5
        cert["lower_bound"] = 6 if not cert["order_multiple_of_10"] and cert["cubic"] else None
        cert["chi_strong"] = 6 if cert["upper_bound"] == cert["lower_bound"] == 6 else None
        result.coloring = phi
    return result


# --------------------------------------------------------------------------
# search for two non-equivalent covers of the Petersen graph with
# isomorphic derived graphs

def _involutions(d: int) -> list[Perm]:
    return [Perm(p) for p in permutations(range(1, d + 1)) if is_involution(Perm(p))]


@dataclass
class NonEquivalentPair:
    status: str
    kappa: VoltageAssignment | None = None
    lam: VoltageAssignment | None = None
    evidence: dict = field(default_factory=dict)


def _lift_invariant(L: DartGraph) -> tuple:
    """Cheap isomorphism invariant: per-vertex counts of closed walks of length 5..8."""
    import numpy as np

    A = np.zeros((L.n, L.n), dtype=np.int64)
    for e in range(L.m):
        a, b = L.ends_i(e)
        A[a, b] += 1
        A[b, a] += 1
    P = A.copy()
    rows = []
    for k in range(2, 9):
        P = P @ A
        if k >= 5:
            rows.append(tuple(sorted(np.diag(P).tolist())))
    return tuple(rows)


def _lifted_colorings_equivalent(kappa, lam, iso) -> bool:
    """Pull sigma_3 back to both lifts, move the second onto the first along
    ``iso`` and ask for a colour-preserving automorphism."""
    from .cover import colorings_equivalent
    from .kneser import canonical_coloring
    from .strong import EdgeColoring, lift_coloring

    sigma = canonical_coloring(3)
    L1, p1 = derived_lift(kappa)
    _, p2 = derived_lift(lam)
    phi1 = lift_coloring(p1, sigma)
    phi2 = lift_coloring(p2, sigma)
    em = iso.edge_map()
    tau = EdgeColoring(5, {e: phi2.colors[em[e]] for e in L1.edges})
    return colorings_equivalent(L1, phi1, tau) is not None


def find_nonequivalent_pair(base: DartGraph | None = None, d: int = 4,
                            time_limit: float | None = None, max_candidates: int | None = None,
                            T: SpanningTree | None = None) -> NonEquivalentPair:
    """Search reduced S_d-voltage assignments on the Petersen graph for two
    non-equivalent natural projections whose derived graphs are isomorphic.

    The first family assigns identity-or-involution values to the cotree darts;
    the second additionally allows one non-involution.  Any cross-family match
    is automatically non-equivalent since the cycle types differ on some dart.
    Candidates are scanned in a fixed order and the first confirmed match is
    returned.
    """
    from .iso import find_isomorphism
    from .kneser import odd_graph

    if base is None:
        base = odd_graph(3)
    if d < 2:
        return NonEquivalentPair("impossible", evidence={"reason": "only one cover of degree 1"})
    if T is None:
        T = spanning_tree(base)
    cot = [e + "+" for e in T.cotree_edges()]
    invols = _involutions(d)
    others = [Perm(p) for p in permutations(range(1, d + 1)) if not is_involution(Perm(p))]
    deadline = None if time_limit is None else time.monotonic() + time_limit
    budget = math.inf if max_candidates is None else max_candidates
    seen = {0: {}, 1: {}}

    def candidates():
        # interleave the two families so a collision appears early
        fam0 = product(invols, repeat=len(cot))
        fam1 = ((j, o, rest) for rest in product(invols, repeat=len(cot) - 1)
                for o in others for j in range(len(cot)))
        for a, b in zip(fam0, fam1):
            yield 0, list(a)
            j, o, rest = b
            vals = list(rest)
            vals.insert(j, o)
            yield 1, vals

    tried = 0
    for fam, vals in candidates():
        if tried >= budget or (deadline is not None and time.monotonic() > deadline):
            return NonEquivalentPair("exhausted", evidence={"candidates": tried})
        tried += 1
        if not is_transitive(vals, d):
            continue
        kappa = VoltageAssignment.from_partial(base, d, dict(zip(cot, vals)))
        L, proj = derived_lift(kappa)
        key = _lift_invariant(L)
        other = seen[1 - fam].get(key, [])
        for k2, L2 in other:
            iso = find_isomorphism(L2, L) if fam == 1 else find_isomorphism(L, L2)
            if iso is None:
                continue
            ka, kb = (k2, kappa) if fam == 1 else (kappa, k2)
            if covers_equivalent_voltage(ka, kb, T) is not None:  # pragma: no cover
                continue
            return NonEquivalentPair("found", ka, kb, {
                "candidates": tried,
                "colorings_equivalent": _lifted_colorings_equivalent(ka, kb, iso),
                "isomorphism": iso.vertex_map,
                "isomorphism_darts": iso.dart_map,
                "reduced_kappa": t_reduction(ka, T).to_obj(),
                "reduced_lambda": t_reduction(kb, T).to_obj(),
                "equivalent": False,
            })
        bucket = seen[fam].setdefault(key, [])
        if len(bucket) < 4:
            bucket.append((kappa, L))
    return NonEquivalentPair("exhausted", evidence={"candidates": tried})
