"""Command-line interface.  Every command prints one JSON document on stdout.

Exit codes: 0 ok, 1 property violated, 2 input error, 3 timeout or budget.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
import json
import logging
import os
import sys
import time

from . import named
from .cover import (CoveringMap, colorings_equivalent, cover_from_strong_coloring, fold_count,
                    verify_cover)
from .graph import DartGraph, GraphError, girth, spanning_tree
from .graphio import graph_to_obj, iter_graph6, parse_graph, write_dot, write_graph6
from .iso import BudgetExceeded
from .kneser import canonical_coloring, kneser_graph, odd_graph
from .petersen import equivalence_report
from .strong import (ColoringError, EdgeColoring, SearchTimeout, chi_strong, edge_class,
                     enumerate_strong, has_strong_coloring, is_normal,
                     is_strong_induced_matching, is_strong_no_bichromatic_path, lift_coloring)
from .voltage import (VoltageAssignment, counterexample_family, covers_equivalent_voltage,
                      derived_lift, find_nonequivalent_pair, girth_double, homology_voltage,
                      lift_connected, t_reduction)

log = logging.getLogger("oddcover")

EXIT = {"ok": 0, "violated": 1, "error": 2, "timeout": 3}


@dataclass
class CommandResult:
    status: str
    payload: object
    log: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]


def threads() -> int:
    try:
        return max(1, int(os.environ.get("ODDCOVER_THREADS", "1")))
    except ValueError:
        return 1


# --- input helpers ---------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON: {exc}") from None


def _unwrap(obj, *keys):
    if isinstance(obj, dict):
        for k in keys:
            if k in obj and isinstance(obj[k], dict):
                return obj[k]
    return obj


def load_graph(path: str) -> DartGraph:
    return parse_graph(_read(path))


def load_coloring(path: str) -> EdgeColoring:
    obj = _unwrap(_json(path), "coloring", "witness", "canonical_coloring")
    return EdgeColoring.from_obj(obj)


def load_cover(path: str) -> CoveringMap:
    return CoveringMap.from_obj(_unwrap(_json(path), "cover"))


def load_voltage(G: DartGraph, path: str) -> VoltageAssignment:
    return VoltageAssignment.from_obj(G, _unwrap(_json(path), "voltage"))


def _dumps(obj) -> str:
    return json.dumps(obj, default=_default)


def _default(o):
    if isinstance(o, float) and o == float("inf"):
        return "inf"
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _gval(g):
    return "inf" if g == float("inf") else int(g)


# --- commands --------------------------------------------------------------

def cmd_kneser(a):
    return CommandResult("ok", graph_to_obj(kneser_graph(a.m, a.n)))


def cmd_odd(a):
    G = odd_graph(a.k)
    obj = graph_to_obj(G)
    obj["canonical_coloring"] = canonical_coloring(a.k).to_obj()
    return CommandResult("ok", obj)


def cmd_named(a):
    if a.name not in named.NAMED:
        raise ValueError(f"unknown graph {a.name!r}; choose from {sorted(named.NAMED)}")
    G = named.NAMED[a.name]()
    if a.format == "graph6":
        return _raw(write_graph6(G) + "\n")
    return CommandResult("ok", graph_to_obj(G))


def _raw(text):
    return CommandResult("ok", _Raw(text))


class _Raw(str):
    pass


def cmd_chi_strong(a):
    G = load_graph(a.graph)
    r = chi_strong(G, time_limit=a.budget_s, node_limit=a.node_limit)
    status = "ok" if r.proof_state == "optimal" else "timeout"
    return CommandResult(status, r.to_obj(), r.log)


def cmd_has_strong(a):
    G = load_graph(a.graph)
    exists, phi = has_strong_coloring(G, a.t, time_limit=a.budget_s)
    payload = {"t": a.t, "exists": exists, "witness": phi.to_obj() if phi else None}
    return CommandResult("ok" if exists else "violated", payload)


def cmd_enumerate_strong(a):
    G = load_graph(a.graph)
    try:
        cols = enumerate_strong(G, a.t, a.cap)
    except ColoringError as exc:
        return CommandResult("timeout", {"error": str(exc)})
    return CommandResult("ok", {"t": a.t, "count": len(cols), "colorings": [c.to_obj() for c in cols]})


def cmd_verify_strong(a):
    G = load_graph(a.graph)
    phi = load_coloring(a.coloring)
    im = is_strong_induced_matching(G, phi)
    bp = is_strong_no_bichromatic_path(G, phi)
    ok = im and bp
    payload = {"strong": ok, "induced_matching": im, "no_bichromatic_path": bp,
               "colors_used": len(phi.used())}
    return CommandResult("ok" if ok else "violated", payload)


def cmd_verify_normal(a):
    G = load_graph(a.graph)
    phi = load_coloring(a.coloring)
    normal = is_normal(G, phi)
    classes = {e: edge_class(G, phi, e) for e in G.edges}
    return CommandResult("ok" if normal else "violated", {"normal": normal, "classes": classes})


def cmd_cover_from_coloring(a):
    G = load_graph(a.graph)
    phi = load_coloring(a.coloring)
    f = cover_from_strong_coloring(G, phi, a.k)
    return CommandResult("ok", {"cover": f.to_obj(), "fold": fold_count(f)})


def cmd_verify_cover(a):
    f = load_cover(a.cover)
    ok, reason = verify_cover(f)
    payload = {"cover": ok, "reason": reason, "fold": fold_count(f) if ok else None}
    return CommandResult("ok" if ok else "violated", payload)


def cmd_lift_coloring(a):
    f = load_cover(a.cover)
    phi = load_coloring(a.coloring)
    return CommandResult("ok", {"coloring": lift_coloring(f, phi).to_obj()})


def cmd_lift_voltage(a):
    G = load_graph(a.graph)
    kappa = load_voltage(G, a.voltages)
    L, proj = derived_lift(kappa)
    payload = {"graph": graph_to_obj(L), "cover": proj.to_obj(), "fold": kappa.d,
               "connected_by_transitivity": lift_connected(kappa)}
    return CommandResult("ok", payload)


def cmd_reduce_voltage(a):
    G = load_graph(a.graph)
    kappa = load_voltage(G, a.voltages)
    T = spanning_tree(G, a.root)
    red = t_reduction(kappa, T)
    payload = {"voltage": red.to_obj(), "root": T.root, "tree_edges": sorted(T.tree_edges)}
    return CommandResult("ok", payload)


def cmd_cover_equiv(a):
    G = load_graph(a.graph)
    k1 = load_voltage(G, a.volt_a)
    k2 = load_voltage(G, a.volt_b)
    T = spanning_tree(G, a.root)
    g = covers_equivalent_voltage(k1, k2, T)
    payload = {"equivalent": g is not None, "conjugator": g.to_list() if g else None}
    return CommandResult("ok" if g else "violated", payload)


def cmd_coloring_equiv(a):
    G = load_graph(a.graph)
    s1 = load_coloring(a.col_a)
    s2 = load_coloring(a.col_b)
    try:
        iso = colorings_equivalent(G, s1, s2)
    except BudgetExceeded as exc:
        return CommandResult("timeout", {"error": str(exc)})
    payload = {"equivalent": iso is not None, "automorphism": iso.vertex_map if iso else None}
    return CommandResult("ok" if iso else "violated", payload)


def cmd_girth_double(a):
    H = load_graph(a.graph)
    L, proj = girth_double(H)
    payload = {"graph": graph_to_obj(L), "homology_voltage": homology_voltage(H).to_obj(),
               "girth_base": _gval(girth(H)), "girth": _gval(girth(L)), "fold": fold_count(proj)}
    return CommandResult("ok", payload)


def cmd_counterexample(a):
    C = counterexample_family(a.n)
    payload = {"graph": graph_to_obj(C.graph), "certificate": C.certificate}
    if C.coloring is not None:
        payload["coloring"] = C.coloring.to_obj()
    return CommandResult("ok", payload)


def cmd_find_nonequiv_pair(a):
    res = find_nonequivalent_pair(d=a.d, time_limit=a.budget_s)
    if res.status != "found":
        return CommandResult("timeout" if res.status == "exhausted" else "violated",
                             {"status": res.status, "evidence": res.evidence})
    ev = {k: v for k, v in res.evidence.items() if k != "isomorphism_darts"}
    payload = {"status": "found", "kappa": res.kappa.to_obj(), "lambda": res.lam.to_obj(), "evidence": ev}
    return CommandResult("ok", payload)


def cmd_petersen_report(a):
    G = load_graph(a.graph)
    rep = equivalence_report(G, time_limit=a.budget_s)
    if rep.inconclusive:
        return CommandResult("timeout", rep.to_obj())
    return CommandResult("ok", rep.to_obj())


def cmd_corpus_chi(a):
    """Strong chromatic index of every graph in a graph6 corpus."""
    rows = []
    status = "ok"
    for i, G in enumerate(iter_graph6(_read(a.corpus))):
        g = girth(G)
        if a.min_girth and g < a.min_girth:
            continue
        r = chi_strong(G, time_limit=a.budget_s)
        if r.proof_state != "optimal":
            status = "timeout"
        rows.append({"index": i, "n": G.n, "m": G.m, "girth": _gval(g),
                     "chi_strong": r.chi_strong, "proof_state": r.proof_state})
    hits = sum(1 for r in rows if a.at_least is not None and r["chi_strong"] >= a.at_least)
    return CommandResult(status, {"graphs": rows, "count": len(rows),
                                  "at_least": a.at_least, "hits": hits if a.at_least else None})


def cmd_export_dot(a):
    G = load_graph(a.graph)
    phi = load_coloring(a.coloring) if a.coloring else None
    return _raw(write_dot(G, phi))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddcover", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *args):
        sp = sub.add_parser(name)
        for a in args:
            sp.add_argument(a)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("kneser", cmd_kneser)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp = add("odd", cmd_odd)
    sp.add_argument("--k", type=int, required=True)
    sp = add("named", cmd_named)
    sp.add_argument("--name", required=True)
    sp.add_argument("--format", choices=["json", "graph6"], default="json")
    sp = add("chi-strong", cmd_chi_strong, "graph")
    sp.add_argument("--budget-s", type=float, default=None)
    sp.add_argument("--node-limit", type=int, default=None)
    sp.add_argument("--deterministic", action="store_true",
                    help="accepted for compatibility; the search is always deterministic")
    sp = add("has-strong", cmd_has_strong, "graph")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--budget-s", type=float, default=None)
    sp = add("enumerate-strong", cmd_enumerate_strong, "graph")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--cap", type=int, default=100000)
    add("verify-strong", cmd_verify_strong, "graph", "coloring")
    add("verify-normal", cmd_verify_normal, "graph", "coloring")
    sp = add("cover-from-coloring", cmd_cover_from_coloring, "graph", "coloring")
    sp.add_argument("--k", type=int, required=True)
    add("verify-cover", cmd_verify_cover, "cover")
    add("lift-coloring", cmd_lift_coloring, "cover", "coloring")
    add("lift-voltage", cmd_lift_voltage, "graph", "voltages")
    sp = add("reduce-voltage", cmd_reduce_voltage, "graph", "voltages")
    sp.add_argument("--root", required=True)
    sp = add("cover-equiv", cmd_cover_equiv, "graph", "volt_a", "volt_b")
    sp.add_argument("--root", required=True)
    add("coloring-equiv", cmd_coloring_equiv, "graph", "col_a", "col_b")
    add("girth-double", cmd_girth_double, "graph")
    sp = add("counterexample", cmd_counterexample)
    sp.add_argument("--n", type=int, required=True)
    sp = add("find-nonequiv-pair", cmd_find_nonequiv_pair)
    sp.add_argument("--budget-s", type=float, default=1800.0)
    sp.add_argument("--d", type=int, default=4)
    sp = add("petersen-report", cmd_petersen_report, "graph")
    sp.add_argument("--budget-s", type=float, default=None)
    sp = add("corpus-chi", cmd_corpus_chi, "corpus")
    sp.add_argument("--budget-s", type=float, default=None, help="per graph")
    sp.add_argument("--min-girth", type=int, default=0)
    sp.add_argument("--at-least", type=int, default=None)
    sp = add("export-dot", cmd_export_dot, "graph")
    sp.add_argument("coloring", nargs="?")
    return p


def run(argv: list[str] | None = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult("error", {"error": "invalid arguments"}, [f"argparse exit {exc.code}"])
    start = time.monotonic()
    try:
        res = args.fn(args)
    except (SearchTimeout, BudgetExceeded) as exc:
        res = CommandResult("timeout", {"error": str(exc)})
    except (GraphError, ColoringError, ValueError, KeyError, OSError) as exc:
        res = CommandResult("error", {"error": f"{type(exc).__name__}: {exc}"})
    res.log.append(f"{args.command} finished in {time.monotonic() - start:.3f}s "
                   f"(threads={threads()})")
    return res


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    verbose = "-v" in argv or "--verbose" in argv
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(message)s")
    res = run(argv)
    if isinstance(res.payload, _Raw):
        sys.stdout.write(res.payload)
    else:
        sys.stdout.write(_dumps(res.payload) + "\n")
    for line in res.log:
        log.info(line)
    return res.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
