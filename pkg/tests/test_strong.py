import random

import pytest
from hypothesis import given, seed, settings, strategies as st

from oddcover import named
from oddcover.graph import GraphError, build_graph
from oddcover.kneser import canonical_coloring, odd_graph
from oddcover.strong import (ColoringError, EdgeColoring, SearchTimeout, chi_strong, conflict_graph,
                             edge_class, edge_star_bound, enumerate_strong, has_strong_coloring,
                             is_normal, is_proper, is_strong, is_strong_induced_matching,
                             is_strong_no_bichromatic_path, max_clique)

from conftest import oracle_chi, oracle_conflicts, oracle_count, random_simple_graph


def test_conflict_graph_matches_oracle(rng):
    for _ in range(40):
        G = random_simple_graph(rng, 8, 14)
        adj = conflict_graph(G)
        conf = oracle_conflicts(G)
        for i, e in enumerate(G.edges):
            assert {G.edges[j] for j in adj[i]} == conf[e]


def test_verifiers_agree_on_random_colorings(rng):
    for _ in range(200):
        G = random_simple_graph(rng, 7, 10)
        t = rng.randint(1, 6)
        phi = EdgeColoring(t, {e: rng.randint(1, t) for e in G.edges})
        a = is_strong_induced_matching(G, phi)
        b = is_strong_no_bichromatic_path(G, phi)
        assert a == b == is_strong(G, phi)


def test_proper_with_loop():
    G = build_graph("ab", [("a", "b"), ("b", "b")])
    assert not is_proper(G, EdgeColoring(2, {"e1": 1, "e2": 2}))


def test_coloring_validation():
    with pytest.raises(ColoringError):
        EdgeColoring(3, {"e1": 4})
    with pytest.raises(ColoringError):
        EdgeColoring.from_obj({"colors": {}})


@pytest.mark.parametrize("G,value", [
    (named.cycle(5), 5),
    (named.cycle(6), 3),
    (named.cycle(4), 4),
    (named.path(4), 3),
    (named.star(4), 4),
    (named.complete(4), 6),
    (named.petersen(), 5),
    (named.cube(), 6),
    (named.complete_bipartite(3, 3), 9),
    (named.wagner(), 10),
    (named.k33_subdivided(), 10),
])
def test_known_values(G, value):
    r = chi_strong(G)
    assert r.proof_state == "optimal"
    assert r.chi_strong == value
    assert is_strong(G, r.witness) and r.witness.palette == value


def test_empty_and_loops():
    assert chi_strong(build_graph("ab", [])).chi_strong == 0
    with pytest.raises(GraphError):
        chi_strong(named.dumbbell())


def test_theta_multigraph():
    # three parallel edges pairwise share both ends
    assert chi_strong(named.theta()).chi_strong == 3


def test_lower_and_upper_hints():
    P = named.petersen()
    r = chi_strong(P, lower_hint=5, upper_hint=5)
    assert r.chi_strong == 5 and r.nodes_explored == 0


def test_budget_states():
    G = named.heawood()
    r = chi_strong(G, node_limit=10)
    assert r.proof_state == "upper-bound-only"
    assert r.lower_bound <= 7 <= r.upper_bound
    assert is_strong(G, r.witness)
    with pytest.raises(SearchTimeout):
        has_strong_coloring(named.tutte_coxeter(), 6, node_limit=5)


def test_clique_bounds():
    for G in [named.petersen(), named.cube(), named.heawood()]:
        adj = conflict_graph(G)
        c = max_clique(adj)
        assert all(v in adj[u] for u in c for v in c if u != v)
        assert len(c) <= chi_strong(G).chi_strong
    # the edge star bound for a cubic graph: an edge with its four neighbours
    assert edge_star_bound(named.petersen()) == 5


def test_has_strong():
    ok, phi = has_strong_coloring(named.petersen(), 5)
    assert ok and is_strong(named.petersen(), phi)
    assert has_strong_coloring(named.cube(), 5) == (False, None)


def test_enumerate_c5():
    cols = enumerate_strong(named.cycle(5), 5)
    assert len(cols) == 120
    assert len({tuple(c.colors.values()) for c in cols}) == 120


def test_enumerate_cap():
    with pytest.raises(ColoringError):
        enumerate_strong(named.star(6), 6, cap=100)


def test_edge_classes():
    P = odd_graph(3)
    sigma = canonical_coloring(3)
    assert is_normal(P, sigma)
    assert all(edge_class(P, sigma, e) == "rich" for e in P.edges)
    K = named.complete(4)
    phi = EdgeColoring(5, {"e1": 1, "e6": 1, "e2": 2, "e5": 2, "e3": 3, "e4": 3})
    assert all(edge_class(K, phi, e) == "poor" for e in K.edges)
    assert is_normal(K, phi)


def test_strong_implies_rich(rng):
    # on cubic graphs with a strong 5-colouring every edge is rich
    P = named.petersen()
    for c in random.Random(3).sample(enumerate_strong(P, 5), 10):
        assert all(edge_class(P, c, e) == "rich" for e in P.edges)


graphs = st.integers(min_value=0, max_value=10**9).map(
    lambda s: random_simple_graph(random.Random(s), 7, 12))


@seed(1014)
@settings(max_examples=60, deadline=None)
@given(graphs)
def test_solver_matches_bruteforce(G):
    r = chi_strong(G)
    assert r.proof_state == "optimal"
    assert r.chi_strong == oracle_chi(G)
    assert is_strong(G, r.witness)


@seed(2026)
@settings(max_examples=60, deadline=None)
@given(graphs)
def test_enumerator_matches_bruteforce(G):
    t = oracle_chi(G)
    cap = 20000
    expected = oracle_count(G, t, cap)
    if expected is None:
        with pytest.raises(ColoringError):
            enumerate_strong(G, t, cap)
        return
    cols = enumerate_strong(G, t, cap)
    assert len(cols) == expected
    assert all(is_strong(G, c) for c in cols)
    vecs = [tuple(c.colors[e] for e in G.edges) for c in cols]
    assert vecs == sorted(set(vecs))
