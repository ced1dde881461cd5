"""Strong edge colourings: verification, classification and exact search.

Strong colouring of ``G`` is vertex colouring of the square of the line graph
of ``G``: two edges conflict when they share a vertex or some edge joins an
end of one to an end of the other.  The exact search runs a DSATUR
branch-and-bound on that conflict graph, with a compiled kernel when
available.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import logging
import os
import time
from typing import Literal

from . import _pykernel
from .graph import DartGraph, GraphError

try:
    from . import _ckernel
except ImportError:  # pragma: no cover - depends on the build
    _ckernel = None

log = logging.getLogger(__name__)


def available_kernels() -> list[str]:
    return (["cython"] if _ckernel is not None else []) + ["python"]


def default_kernel() -> str:
    if os.environ.get("ODDCOVER_PURE_PYTHON") == "1" or _ckernel is None:
        return "python"
    return "cython"


def _kernel_module(kernel: str | None):
    kernel = kernel or default_kernel()
    if kernel == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not built")
        return _ckernel
    if kernel == "python":
        return _pykernel
    raise ValueError(f"unknown kernel {kernel!r}")


def tabu_iterations(m: int) -> int:
    return 2000 + 20 * m


class ColoringError(ValueError):
    pass


class SearchTimeout(RuntimeError):
    pass


@dataclass
class EdgeColoring:
    palette: int
    colors: dict[str, int]

    def __post_init__(self):
        for e, c in self.colors.items():
            if not 1 <= c <= self.palette:
                raise ColoringError(f"colour {c} on {e!r} outside 1..{self.palette}")

    def used(self) -> set[int]:
        return set(self.colors.values())

    def permuted(self, rho: dict[int, int]) -> "EdgeColoring":
        return EdgeColoring(self.palette, {e: rho[c] for e, c in self.colors.items()})

    def to_obj(self) -> dict:
        return {"palette": self.palette, "colors": dict(self.colors)}

    @classmethod
    def from_obj(cls, obj) -> "EdgeColoring":
        try:
            return cls(int(obj["palette"]), {str(e): int(c) for e, c in obj["colors"].items()})
        except (KeyError, TypeError, AttributeError) as exc:
            raise ColoringError(f"malformed coloring JSON: {exc}") from None


def _require_total(G: DartGraph, phi: EdgeColoring):
    missing = [e for e in G.edges if e not in phi.colors]
    if missing:
        raise ColoringError(f"coloring is partial; missing {missing[:5]}")


def _incident(G: DartGraph) -> list[set[int]]:
    inc = [set() for _ in range(G.n)]
    for e in range(G.m):
        a, b = G.ends_i(e)
        inc[a].add(e)
        inc[b].add(e)
    return inc


def conflict_graph(G: DartGraph) -> list[list[int]]:
    """Neighbour lists of the square of the line graph (edge indices)."""
    inc = _incident(G)
    closed = [{v} | {G.head_i(x) for x in G.out_i(v)} for v in range(G.n)]
    out = []
    for e in range(G.m):
        a, b = G.ends_i(e)
        nb = set()
        for w in closed[a] | closed[b]:
            nb |= inc[w]
        nb.discard(e)
        out.append(sorted(nb))
    return out


def is_proper(G: DartGraph, phi: EdgeColoring) -> bool:
    _require_total(G, phi)
    for v in G.vertices:
        darts = G.darts_at(v)
        edges = [G.edge_of(x) for x in darts]
        if len(set(edges)) != len(edges):
            return False  # a loop meets itself
        cols = [phi.colors[e] for e in edges]
        if len(set(cols)) != len(cols):
            return False
    return True


def is_strong_induced_matching(G: DartGraph, phi: EdgeColoring) -> bool:
    """Every colour class is an induced matching."""
    _require_total(G, phi)
    classes: dict[int, list[int]] = {}
    for e in range(G.m):
        classes.setdefault(phi.colors[G.edges[e]], []).append(e)
    for cls in classes.values():
        owner = {}
        for e in cls:
            a, b = G.ends_i(e)
            if a == b:
                return False
            for w in (a, b):
                if w in owner:
                    return False
                owner[w] = e
        for e in range(G.m):
            a, b = G.ends_i(e)
            if a in owner and b in owner and owner[a] != owner[b]:
                return False
    return True


def is_strong_no_bichromatic_path(G: DartGraph, phi: EdgeColoring) -> bool:
    """Proper, and no path of three edges whose end edges share a colour."""
    if not is_proper(G, phi):
        return False
    col = [phi.colors[e] for e in G.edges]
    for x in range(2 * G.m):
        mid = x >> 1
        y, z = G.tail_i(x), G.head_i(x)
        left = {d >> 1 for d in G.out_i(y)} - {mid}
        right = {d >> 1 for d in G.out_i(z)} - {mid}
        for e1 in left:
            for e3 in right:
                if e1 != e3 and col[e1] == col[e3]:
                    return False
    return True


def is_strong(G: DartGraph, phi: EdgeColoring) -> bool:
    a = is_strong_induced_matching(G, phi)
    b = is_strong_no_bichromatic_path(G, phi)
    if a != b:  # pragma: no cover - the two characterizations are equivalent
        raise AssertionError("strongness characterizations disagree")
    return a


def adjacent_edges(G: DartGraph, e: str) -> list[str]:
    a, b = G.ends[G.ei(e)]
    out = []
    for v in (a, b):
        for f in G.edges_at(v):
            if f != e and f not in out:
                out.append(f)
    return out


EdgeClass = Literal["rich", "poor", "neither"]


def edge_class(G: DartGraph, phi: EdgeColoring, e: str) -> EdgeClass:
    if not is_proper(G, phi):
        raise ColoringError("edge classes need a proper coloring")
    return _edge_class(G, phi, e)


def _edge_class(G, phi, e):
    adj = [phi.colors[f] for f in adjacent_edges(G, e)]
    if len(set(adj)) == len(adj):
        return "rich"
    a, b = G.ends[G.ei(e)]
    if G.degree(a) == 3 and G.degree(b) == 3 and len(adj) == 4 and len(set(adj)) == 2:
        return "poor"
    return "neither"


def is_normal(G: DartGraph, phi: EdgeColoring) -> bool:
    if not G.is_regular(3) or G.n == 0:
        raise ColoringError("normal colorings are defined for cubic graphs")
    if phi.palette != 5:
        raise ColoringError("normal colorings use a palette of 5")
    if not is_proper(G, phi):
        raise ColoringError("normal colorings must be proper")
    return all(_edge_class(G, phi, e) != "neither" for e in G.edges)


# --------------------------------------------------------------------------
# exact search

def max_clique(adj: list[list[int]]) -> list[int]:
    """Maximum clique by simple bitset branch and bound."""
    n = len(adj)
    nb = [0] * n
    for v in range(n):
        for u in adj[v]:
            nb[v] |= 1 << u
    best: list[int] = []

    def expand(clique, cand):
        nonlocal best
        if not cand:
            if len(clique) > len(best):
                best = list(clique)
            return
        while cand:
            if len(clique) + bin(cand).count("1") <= len(best):
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            clique.append(v)
            expand(clique, cand & nb[v])
            clique.pop()

    expand([], (1 << n) - 1)
    return sorted(best)


def edge_star_bound(G: DartGraph) -> int:
    """Size of the closed edge-neighbourhood of a highest-degree edge."""
    best = 0
    for e in G.edges:
        best = max(best, 1 + len(adjacent_edges(G, e)))
    return best


def greedy_dsatur(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    color = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] < 0),
                key=lambda u: (len(seen[u]), len(adj[u]), -u))
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for u in adj[v]:
            seen[u].add(c)
    return color


@dataclass
class SolveResult:
    chi_strong: int
    witness: EdgeColoring | None
    proof_state: Literal["optimal", "upper-bound-only", "timeout"]
    nodes_explored: int
    lower_bound: int
    upper_bound: int
    kernel: str = ""
    log: list[str] = field(default_factory=list)

    def to_obj(self) -> dict:
        return {
            "chi_strong": self.chi_strong,
            "proof_state": self.proof_state,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "nodes_explored": self.nodes_explored,
            "witness": self.witness.to_obj() if self.witness else None,
        }


class _Budget:
    def __init__(self, node_limit, time_limit):
        self.node_limit = node_limit
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.nodes = 0

    def args(self):
        nl = -1 if self.node_limit is None else max(0, self.node_limit - self.nodes)
        tl = -1.0 if self.deadline is None else max(0.0, self.deadline - time.monotonic())
        return nl, tl


def _reject_loops(G: DartGraph):
    if G.has_loops():
        raise GraphError("strong colourings of graphs with loops are not considered")


def _decide(G, adj, clique, t, budget: _Budget, kernel):
    """Run the kernel for palette ``t``; returns (status, EdgeColoring|None)."""
    search = _kernel_module(kernel).dsatur_search
    if len(clique) > t:
        return 0, None
    pre = [(v, i) for i, v in enumerate(clique)]
    nl, tl = budget.args()
    status, colors, nodes = search(G.m, adj, t, pre, nl, tl)
    budget.nodes += nodes
    if status != 1:
        return status, None
    phi = EdgeColoring(t, {G.edges[i]: colors[i] + 1 for i in range(G.m)})
    if not is_strong(G, phi):  # pragma: no cover - kernel bug guard
        raise AssertionError("kernel returned a non-strong coloring")
    return 1, phi


def _tabu(G, adj, t, kernel, seed=1):
    colors, _ = _kernel_module(kernel).tabucol(G.m, adj, t, seed, tabu_iterations(G.m))
    if colors is None:
        return None
    phi = EdgeColoring(t, {G.edges[i]: colors[i] + 1 for i in range(G.m)})
    if not is_strong(G, phi):  # pragma: no cover - kernel bug guard
        raise AssertionError("tabu kernel returned a non-strong coloring")
    return phi


def has_strong_coloring(G: DartGraph, t: int, node_limit: int | None = None,
                        time_limit: float | None = None, kernel: str | None = None):
    """Decide whether ``G`` has a strong ``t``-edge-colouring.

    Returns ``(exists, witness)``; raises :class:`SearchTimeout` when the
    budget runs out before the question is settled.
    """
    _reject_loops(G)
    if G.m == 0:
        return True, EdgeColoring(max(t, 1), {})
    adj = conflict_graph(G)
    clique = max_clique(adj)
    if len(clique) <= t:
        phi = _tabu(G, adj, t, kernel)
        if phi is not None:
            return True, phi
    status, phi = _decide(G, adj, clique, t, _Budget(node_limit, time_limit), kernel)
    if status == -1:
        raise SearchTimeout(f"budget exhausted deciding palette {t}")
    return status == 1, phi


def chi_strong(G: DartGraph, lower_hint: int | None = None, upper_hint: int | None = None,
               node_limit: int | None = None, time_limit: float | None = None,
               kernel: str | None = None) -> SolveResult:
    """Exact strong chromatic index by ascending palette search.

    ``lower_hint`` is trusted as a proven lower bound.  ``upper_hint`` is
    tried first to shorten the search for an upper-bound witness.
    """
    _reject_loops(G)
    kname = kernel or default_kernel()
    if G.m == 0:
        return SolveResult(0, EdgeColoring(1, {}), "optimal", 0, 0, 0, kname)
    adj = conflict_graph(G)
    clique = max_clique(adj)
    lb = max(len(clique), lower_hint or 0)
    greedy = greedy_dsatur(adj)
    ub = max(greedy) + 1
    best = EdgeColoring(ub, {G.edges[i]: greedy[i] + 1 for i in range(G.m)})
    budget = _Budget(node_limit, time_limit)
    notes = [f"clique bound {len(clique)}, greedy bound {ub}"]
    if upper_hint is not None and lb <= upper_hint < ub:
        status, phi = _decide(G, adj, clique, upper_hint, budget, kname)
        if status == 1:
            ub, best = upper_hint, phi
    # tabu search tightens the upper bound before the exact ascent
    while ub - 1 >= lb:
        phi = _tabu(G, adj, ub - 1, kname)
        if phi is None:
            break
        ub, best = ub - 1, phi
        notes.append(f"tabu search found palette {ub}")
    t = lb
    while t < ub:
        status, phi = _decide(G, adj, clique, t, budget, kname)
        if status == 1:
            ub, best = t, phi
            break
        if status == -1:
            state = "timeout" if budget.deadline is not None and time.monotonic() >= budget.deadline \
                else "upper-bound-only"
            notes.append(f"budget exhausted at palette {t}")
            return SolveResult(ub, best, state, budget.nodes, t, ub, kname, notes)
        notes.append(f"palette {t} impossible")
        t += 1
    return SolveResult(ub, best, "optimal", budget.nodes, ub, ub, kname, notes)


def enumerate_strong(G: DartGraph, t: int, cap: int = 100_000) -> list[EdgeColoring]:
    """Every strong colouring with colours in 1..t, as functions on edges.

    The result is sorted by the colour vector in edge input order.
    """
    _reject_loops(G)
    m = G.m
    adj = conflict_graph(G)
    order: list[int] = []
    placed = [False] * m
    score = [0] * m
    for _ in range(m):
        v = max((u for u in range(m) if not placed[u]), key=lambda u: (score[u], len(adj[u]), -u))
        placed[v] = True
        order.append(v)
        for u in adj[v]:
            score[u] += 1
    earlier = [[u for u in adj[v] if order.index(u) < i] for i, v in enumerate(order)]
    color = [0] * m
    found: list[tuple[int, ...]] = []

    def rec(i):
        if i == m:
            found.append(tuple(color))
            if len(found) > cap:
                raise ColoringError(f"more than {cap} colorings")
            return
        v = order[i]
        banned = {color[u] for u in earlier[i]}
        for c in range(1, t + 1):
            if c not in banned:
                color[v] = c
                rec(i + 1)
        color[v] = 0

    rec(0)
    found.sort()
    return [EdgeColoring(t, dict(zip(G.edges, f))) for f in found]


def lift_coloring(f, phi: EdgeColoring) -> EdgeColoring:
    """Pull a colouring of the target back through a covering projection."""
    from .cover import verify_cover

    ok, reason = verify_cover(f)
    if not ok:
        raise GraphError(f"not a covering projection: {reason}")
    colors = {}
    for e in f.source.edges:
        colors[e] = phi.colors[f.target.edge_of(f.dart_map[e + "+"])]
    return EdgeColoring(phi.palette, colors)
