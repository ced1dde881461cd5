"""graph6, JSON and DOT serialization."""
from __future__ import annotations

import json
from typing import Any

from .graph import DartGraph, GraphError, build_graph


class FormatError(GraphError):
    pass


def _n_bytes(n: int) -> list[int]:
    if n < 63:
        return [n + 63]
    if n < 258048:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n < 68719476736:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise FormatError("graph too large for graph6")


def write_graph6(G: DartGraph) -> str:
    """Encode a simple graph; vertices are numbered in ``G.vertices`` order."""
    if not G.is_simple():
        raise FormatError("graph6 cannot represent loops or parallel edges")
    n = G.n
    adj = set()
    for e in range(G.m):
        a, b = G.ends_i(e)
        adj.add((min(a, b), max(a, b)))
    bits = [1 if (i, j) in adj else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    data = _n_bytes(n)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        data.append(v + 63)
    return bytes(data).decode("ascii")


def parse_graph6(text: str) -> DartGraph:
    """Decode graph6.  Vertices become ``"0" .. "n-1"``; edges are listed by (i, j), i < j."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    raw = [ord(ch) - 63 for ch in s]
    if any(c < 0 or c > 63 for c in raw):
        raise FormatError("graph6 characters must lie in range 63..126")
    if raw[0] < 63:
        n, pos = raw[0], 1
    elif len(raw) >= 4 and raw[1] < 63:
        n, pos = (raw[1] << 12) | (raw[2] << 6) | raw[3], 4
    elif len(raw) >= 8:
        n = 0
        for c in raw[2:8]:
            n = (n << 6) | c
        pos = 8
    else:
        raise FormatError("truncated graph6 size header")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = raw[pos:]
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for c in body:
        bits.extend((c >> s) & 1 for s in range(5, -1, -1))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    pairs.sort()
    return build_graph([str(i) for i in range(n)], [(str(i), str(j)) for i, j in pairs])



def iter_graph6(text: str):
    """Graphs of a graph6 corpus, one per non-empty line."""
    for ln in text.splitlines():
        if ln.strip():
            yield parse_graph6(ln)

def graph_to_obj(G: DartGraph) -> dict[str, Any]:
    return {
        "vertices": list(G.vertices),
        "edges": [{"id": e, "ends": [a, b]} for e, (a, b) in zip(G.edges, G.ends)],
    }


def graph_from_obj(obj: dict[str, Any]) -> DartGraph:
    try:
        vertices = [str(v) for v in obj["vertices"]]
        edges = [(str(e["id"]), str(e["ends"][0]), str(e["ends"][1])) for e in obj["edges"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise FormatError(f"malformed graph JSON: {exc}") from None
    for e in obj["edges"]:
        if len(e["ends"]) != 2:
            raise FormatError(f"edge {e['id']!r} must have exactly two ends")
    return DartGraph(vertices, edges)


def write_json(G: DartGraph) -> str:
    return json.dumps(graph_to_obj(G))


def parse_json(text: str) -> DartGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if isinstance(obj, dict) and "graph" in obj and "vertices" not in obj:
        obj = obj["graph"]
    return graph_from_obj(obj)


def parse_graph(text: str) -> DartGraph:
    """Auto-detect JSON (leading ``{``) versus graph6."""
    s = text.strip()
    if s.startswith("{"):
        return parse_json(s)
    lines = [ln for ln in s.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise FormatError("expected exactly one graph6 line")
    return parse_graph6(lines[0])


_DOT_COLORS = [
    "red", "blue", "green3", "orange", "purple", "brown", "cyan3", "magenta",
    "gold3", "gray40", "darkgreen", "navy",
]


def write_dot(G: DartGraph, coloring=None) -> str:
    """DOT text; edges are coloured by palette index when a coloring is given."""
    lines = ["graph G {"]
    for v in G.vertices:
        lines.append(f'  "{v}";')
    for e, (a, b) in zip(G.edges, G.ends):
        attrs = [f'id="{e}"']
        if coloring is not None:
            c = coloring.colors[e]
            attrs.append(f'label="{c}"')
            attrs.append(f'color="{_DOT_COLORS[(c - 1) % len(_DOT_COLORS)]}"')
        lines.append(f'  "{a}" -- "{b}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
