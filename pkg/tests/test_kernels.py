import random

import pytest

from oddcover import _pykernel
from oddcover import named
from oddcover.strong import available_kernels, chi_strong, conflict_graph, default_kernel, max_clique

needs_ext = pytest.mark.skipif("cython" not in available_kernels(), reason="extension not built")


def random_adj(rng, n, p):
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i].append(j)
                adj[j].append(i)
    return adj


def test_default_kernel_env(monkeypatch):
    monkeypatch.setenv("ODDCOVER_PURE_PYTHON", "1")
    assert default_kernel() == "python"


def test_python_kernel_brute(rng):
    # compare against brute force on tiny graphs
    from itertools import product
    for _ in range(30):
        n = rng.randint(1, 7)
        adj = random_adj(rng, n, 0.5)
        for t in range(1, 4):
            st, col, _ = _pykernel.dsatur_search(n, adj, t, [])
            brute = any(all(c[u] != c[v] for u in range(n) for v in adj[u])
                        for c in product(range(t), repeat=n))
            assert (st == 1) == brute
            if st == 1:
                assert all(col[u] != col[v] for u in range(n) for v in adj[u])


@needs_ext
def test_dsatur_twins_agree(rng):
    from oddcover import _ckernel
    for _ in range(40):
        n = rng.randint(1, 40)
        adj = random_adj(rng, n, rng.uniform(0.1, 0.6))
        for t in range(1, 8):
            assert _pykernel.dsatur_search(n, adj, t, []) == _ckernel.dsatur_search(n, adj, t, [])


@needs_ext
def test_dsatur_twins_agree_with_precolouring_and_limits():
    from oddcover import _ckernel
    G = named.heawood()
    adj = conflict_graph(G)
    pre = [(v, i) for i, v in enumerate(max_clique(adj))]
    for t in (6, 7):
        assert _pykernel.dsatur_search(G.m, adj, t, pre) == _ckernel.dsatur_search(G.m, adj, t, pre)
    assert _pykernel.dsatur_search(G.m, adj, 6, pre, 50)[0] == -1
    assert _ckernel.dsatur_search(G.m, adj, 6, pre, 50) == _pykernel.dsatur_search(G.m, adj, 6, pre, 50)


@needs_ext
def test_tabucol_twins_agree(rng):
    from oddcover import _ckernel
    for _ in range(20):
        n = rng.randint(1, 60)
        adj = random_adj(rng, n, rng.uniform(0.05, 0.4))
        for t in (2, 4, 6):
            for s in (1, 7):
                assert _pykernel.tabucol(n, adj, t, s, 500) == _ckernel.tabucol(n, adj, t, s, 500)


@needs_ext
def test_solver_same_answer_both_kernels():
    for G in [named.petersen(), named.cube(), named.heawood()]:
        a = chi_strong(G, kernel="python")
        b = chi_strong(G, kernel="cython")
        assert a.to_obj() == b.to_obj()
