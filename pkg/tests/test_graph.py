import math
import random

import networkx as nx
import pytest

from oddcover import named
from oddcover.graph import (DartGraph, GraphError, betti, bipartition, build_graph, components,
                            girth, is_bipartite, is_connected, is_forest, spanning_tree)

from conftest import random_connected_multigraph, random_simple_graph, to_nx


def test_darts_and_inverse():
    G = build_graph("ab", [("a", "b"), ("b", "b")])
    assert list(G.darts) == ["e1+", "e1-", "e2+", "e2-"]
    assert G.tail("e1+") == "a" and G.head("e1+") == "b"
    assert G.inv("e1+") == "e1-" and G.inv(G.inv("e2-")) == "e2-"
    assert G.is_loop("e2") and G.has_loops() and not G.is_simple()
    # a loop contributes two darts at its vertex
    assert G.degree("b") == 3


def test_handshake_on_random_multigraphs(rng):
    for _ in range(50):
        G = random_connected_multigraph(rng)
        assert sum(G.degrees()) == 2 * G.m
        for x in G.darts:
            assert G.head(x) == G.tail(G.inv(x))


def test_bad_input():
    with pytest.raises(GraphError):
        DartGraph(["a", "a"], [])
    with pytest.raises(GraphError):
        DartGraph(["a"], [("e", "a", "z")])
    with pytest.raises(GraphError):
        DartGraph(["a", "b"], [("e", "a", "b"), ("e", "b", "a")])


def test_dumbbell_basics():
    D = named.dumbbell()
    assert D.degrees() == [3, 3]
    assert betti(D) == 2
    assert girth(D) == 1


def test_girth_named():
    assert girth(named.petersen()) == 5
    assert girth(named.heawood()) == 6
    assert girth(named.tutte_coxeter()) == 8
    assert girth(named.cube()) == 4
    assert girth(named.theta()) == 2
    assert girth(named.path(4)) == math.inf


def test_girth_matches_networkx(rng):
    for _ in range(60):
        G = random_simple_graph(rng, 9, 14)
        expected = nx.girth(nx.Graph(to_nx(G)))
        assert girth(G) == expected


def test_connectivity_and_bipartite_match_networkx(rng):
    for _ in range(60):
        G = random_simple_graph(rng)
        H = nx.Graph(to_nx(G))
        assert is_connected(G) == (G.n > 0 and nx.is_connected(H))
        assert len(components(G)) == nx.number_connected_components(H)
        assert is_bipartite(G) == nx.is_bipartite(H)
        assert is_forest(G) == nx.is_forest(H)


def test_bipartition_valid():
    side = bipartition(named.heawood())
    G = named.heawood()
    for a, b in G.ends:
        assert side[G.vi(a)] != side[G.vi(b)]
    assert bipartition(named.petersen()) is None


def test_spanning_tree(rng):
    for _ in range(40):
        G = random_connected_multigraph(rng)
        T = spanning_tree(G)
        assert len(T.tree_edges) == G.n - 1
        assert len(T.cotree_edges()) == betti(G)
        for w in G.vertices:
            p = T.path(w)
            v = T.root
            for x in p:
                assert G.tail(x) == v
                v = G.head(x)
            assert v == w


def test_spanning_tree_disconnected():
    with pytest.raises(GraphError):
        spanning_tree(build_graph("ab", []))
