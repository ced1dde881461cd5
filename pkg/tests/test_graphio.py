import json

import networkx as nx
import pytest

from oddcover import named
from oddcover.graph import build_graph
from oddcover.graphio import (FormatError, graph_from_obj, graph_to_obj, parse_graph, parse_graph6,
                              parse_json, write_dot, write_graph6, write_json)
from oddcover.iso import is_isomorphic
from oddcover.strong import EdgeColoring

from conftest import random_simple_graph, to_nx


def test_graph6_against_networkx(rng):
    for _ in range(40):
        G = random_simple_graph(rng, 12, 30)
        H = nx.Graph(to_nx(G))
        H = nx.relabel_nodes(H, {v: int(v) for v in H})
        mine = write_graph6(G)
        theirs = nx.to_graph6_bytes(H, nodes=sorted(H), header=False).decode().strip()
        assert mine == theirs


def test_graph6_round_trip_positional(rng):
    for _ in range(30):
        G = random_simple_graph(rng, 70, 80)
        back = parse_graph6(write_graph6(G))
        assert back.n == G.n and back.m == G.m
        assert is_isomorphic(G, back) is not None


def test_graph6_header_and_large():
    P = named.petersen()
    s = write_graph6(P)
    assert parse_graph6(">>graph6<<" + s).m == 15
    G = build_graph(range(70), [(i, i + 1) for i in range(69)])
    assert parse_graph6(write_graph6(G)).m == 69


def test_graph6_rejects_multigraph():
    with pytest.raises(FormatError):
        write_graph6(named.theta())


@pytest.mark.parametrize("text", ["", "?!", "A_x", "Bw~~~"])
def test_graph6_bad(text):
    with pytest.raises(FormatError):
        parse_graph6(text)


def test_json_round_trip():
    for G in [named.theta(), named.dumbbell(), named.petersen()]:
        assert parse_json(write_json(G)) == G
        assert graph_from_obj(json.loads(json.dumps(graph_to_obj(G)))) == G


def test_parse_graph_autodetect():
    P = named.petersen()
    assert parse_graph(write_json(P)) == P
    assert parse_graph(write_graph6(P)).m == 15
    wrapped = json.dumps({"graph": graph_to_obj(P), "other": 1})
    assert parse_graph(wrapped) == P


def test_json_errors():
    with pytest.raises(FormatError):
        parse_json("{not json")
    with pytest.raises(FormatError):
        parse_json('{"vertices": ["a"], "edges": [["e", "a", "b"]]}')


def test_dot():
    G = named.complete(3)
    phi = EdgeColoring(3, {"e1": 1, "e2": 2, "e3": 3})
    dot = write_dot(G, phi)
    assert dot.startswith("graph") and dot.count("--") == 3
    assert "color" in dot


def test_iter_graph6():
    from oddcover.graphio import iter_graph6
    text = "\n".join(write_graph6(G) for G in [named.petersen(), named.cube()]) + "\n\n"
    assert [G.m for G in iter_graph6(text)] == [15, 12]
