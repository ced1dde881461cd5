import math
from itertools import combinations

import pytest

from oddcover.graph import GraphError, girth
from oddcover.kneser import (KneserVertex, canonical_coloring, derived_vertex_coloring, edge_id,
                             kneser_graph, odd_graph, parse_vertex_id, reconstruct_coloring,
                             vertex_id)
from oddcover.strong import EdgeColoring, is_strong


@pytest.mark.parametrize("m,n", [(3, 1), (5, 2), (7, 3), (7, 2), (8, 3), (9, 4)])
def test_counts(m, n):
    G = kneser_graph(m, n)
    assert G.n == math.comb(m, n)
    assert G.m == math.comb(m, n) * math.comb(m - n, n) // 2
    assert G.is_regular(math.comb(m - n, n))


def test_adjacency_is_disjointness():
    G = kneser_graph(6, 2)
    vs = {v: set(parse_vertex_id(v)) for v in G.vertices}
    adj = {frozenset(p) for p in G.ends}
    for a, b in combinations(G.vertices, 2):
        assert (frozenset((a, b)) in adj) == (not vs[a] & vs[b])


def test_ids():
    assert vertex_id((2, 1)) == "1-2"
    assert parse_vertex_id("1-3-4") == (1, 3, 4)
    assert edge_id((3, 4), (1, 2)) == "1-2|3-4"
    v = KneserVertex.parse("2-5", 5)
    assert v.id == "2-5"
    with pytest.raises(ValueError):
        KneserVertex.parse("2-9", 5)


def test_small_m_rejected():
    with pytest.raises((GraphError, ValueError)):
        kneser_graph(4, 2)


def test_odd_graph_girth():
    assert girth(odd_graph(3)) == 5
    assert girth(odd_graph(4)) == 6


@pytest.mark.parametrize("k", [3, 4, 5])
def test_canonical_coloring_strong(k):
    G = odd_graph(k)
    sigma = canonical_coloring(k)
    assert is_strong(G, sigma)
    assert sigma.used() == set(range(1, 2 * k))


@pytest.mark.parametrize("k", [3, 4])
def test_derived_round_trip(k):
    G = odd_graph(k)
    sigma = canonical_coloring(k)
    der = derived_vertex_coloring(G, sigma, k)
    # on O_k the colours absent at a vertex spell out the vertex itself
    for v in G.vertices:
        assert der.as_kneser(v).id == v
    assert reconstruct_coloring(G, der).colors == sigma.colors


def test_derived_rejects_non_strong():
    G = odd_graph(3)
    bad = EdgeColoring(5, {e: 1 for e in G.edges})
    with pytest.raises(ValueError):
        derived_vertex_coloring(G, bad, 3)
