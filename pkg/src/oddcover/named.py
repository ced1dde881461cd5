"""Small named graphs used throughout the tests and the CLI."""
from __future__ import annotations

from .graph import DartGraph, build_graph


def lcf(n: int, shifts: list[int], repeats: int) -> DartGraph:
    """Hamiltonian cubic graph from LCF notation ``[shifts]^repeats``."""
    pairs = set()
    for i in range(n):
        pairs.add(frozenset((i, (i + 1) % n)))
    seq = shifts * repeats
    if len(seq) != n:
        raise ValueError("LCF sequence length must equal the order")
    for i, s in enumerate(seq):
        pairs.add(frozenset((i, (i + s) % n)))
    edges = sorted(tuple(sorted(p)) for p in pairs)
    return build_graph(range(n), edges)


def cycle(n: int) -> DartGraph:
    return build_graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> DartGraph:
    return build_graph(range(n), [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> DartGraph:
    return build_graph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> DartGraph:
    return build_graph(range(a + b), [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> DartGraph:
    return build_graph(range(k + 1), [(0, i) for i in range(1, k + 1)])


def theta() -> DartGraph:
    """Two vertices joined by three parallel edges."""
    return build_graph(["u", "v"], [("u", "v")] * 3)


def dumbbell() -> DartGraph:
    """Two adjacent vertices, each carrying a loop."""
    return build_graph(["u", "v"], [("u", "u"), ("u", "v"), ("v", "v")],
                       edge_ids=["loop_u", "bridge", "loop_v"])


def cube() -> DartGraph:
    """The 3-cube Q3 on vertices 000..111."""
    vs = [format(i, "03b") for i in range(8)]
    edges = [(vs[i], vs[i ^ (1 << b)]) for i in range(8) for b in range(3) if i < i ^ (1 << b)]
    return build_graph(vs, edges)


def petersen() -> DartGraph:
    """Generalized Petersen graph GP(5, 2) (outer o*, inner i*)."""
    vs = [f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)]
    edges = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    edges += [(f"o{i}", f"i{i}") for i in range(5)]
    edges += [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    return build_graph(vs, edges)


def heawood() -> DartGraph:
    return lcf(14, [5, -5], 7)


def tutte_coxeter() -> DartGraph:
    """The Tutte 8-cage (30 vertices, girth 8)."""
    return lcf(30, [-13, -9, 7, -7, 9, 13], 5)


def wagner() -> DartGraph:
    """Moebius ladder on 8 vertices."""
    return build_graph(range(8), [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


def k33_subdivided() -> DartGraph:
    """K_{3,3} with one edge subdivided by a new vertex ``s``."""
    G = complete_bipartite(3, 3)
    edges = [(a, b) for a, b in G.ends if (a, b) != ("0", "3")]
    edges += [("0", "s"), ("s", "3")]
    return build_graph(list(G.vertices) + ["s"], edges)


NAMED = {
    "petersen": petersen,
    "cube": cube,
    "q3": cube,
    "heawood": heawood,
    "tutte-coxeter": tutte_coxeter,
    "wagner": wagner,
    "k4": lambda: complete(4),
    "k33": lambda: complete_bipartite(3, 3),
    "k33-subdivided": k33_subdivided,
    "theta": theta,
    "dumbbell": dumbbell,
}
