"""Shared fixtures and independent oracles.

The oracles deliberately avoid the package's own conflict graph and search
code: distance-2 edge conflicts come from networkx, and colourings are found
by plain backtracking over edges in input order.
"""
import itertools
import math
import random

import networkx as nx
import pytest

from oddcover.graph import build_graph


def to_nx(G):
    H = nx.MultiGraph()
    H.add_nodes_from(G.vertices)
    for e, (a, b) in zip(G.edges, G.ends):
        H.add_edge(a, b, key=e)
    return H


def oracle_conflicts(G):
    """Pairs of edges within distance 1 in the line graph, via networkx."""
    H = nx.Graph()
    H.add_nodes_from(G.edges)
    ends = dict(zip(G.edges, G.ends))
    for e, f in itertools.combinations(G.edges, 2):
        a, b = ends[e]
        c, d = ends[f]
        if {a, b} & {c, d}:
            H.add_edge(e, f)
    # square of the line graph
    sq = nx.power(H, 2) if H.number_of_edges() else H
    return {e: set(sq[e]) for e in G.edges}


def _canonical_colorings(G, t):
    """Strong t-colourings whose colours appear in first-use order 1, 2, ...

    Every strong colouring is a unique relabelling of exactly one of these.
    Yields the number of colours used by each.
    """
    conf = oracle_conflicts(G)
    edges = list(G.edges)
    col = {}

    def rec(i, used):
        if i == len(edges):
            yield used
            return
        e = edges[i]
        for c in range(1, min(t, used + 1) + 1):
            if all(col.get(f) != c for f in conf[e]):
                col[e] = c
                yield from rec(i + 1, max(used, c))
                del col[e]

    yield from rec(0, 0)


def oracle_count(G, t, cap=None):
    """Number of strong t-colourings by naive backtracking (None above ``cap``)."""
    count = 0
    for k in _canonical_colorings(G, t):
        count += math.perm(t, k)
        if cap is not None and count > cap:
            return None
    return count


def oracle_exists(G, t):
    return next(_canonical_colorings(G, t), None) is not None


def oracle_chi(G):
    t = 0
    while not oracle_exists(G, t):
        t += 1
    return t


def random_simple_graph(rng, max_vertices=8, max_edges=12):
    n = rng.randint(1, max_vertices)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    k = rng.randint(0, min(max_edges, len(pairs)))
    return build_graph([str(i) for i in range(n)], [(str(a), str(b)) for a, b in pairs[:k]])


def random_connected_multigraph(rng, max_vertices=8, extra=4, loops=True):
    """Random spanning tree plus a few extra edges, possibly parallel or loops."""
    n = rng.randint(1, max_vertices)
    vs = [str(i) for i in range(n)]
    edges = [(vs[rng.randrange(i)], vs[i]) for i in range(1, n)]
    for _ in range(rng.randint(0 if n > 1 else 1, extra)):
        a, b = rng.choice(vs), rng.choice(vs)
        if a == b and not loops:
            continue
        edges.append((a, b))
    return build_graph(vs, edges)


@pytest.fixture
def rng():
    return random.Random(20261014)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:  # pragma: no cover
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, title, dt, err = RESULTS[num]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {num:>2}: {title} ({dt:.2f}s)"
        terminalreporter.write_line(line + (f"  [{err}]" if err else ""))
