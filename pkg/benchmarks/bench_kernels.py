"""Compiled vs pure-Python kernels on the solver's hot paths.

    python benchmarks/bench_kernels.py [--repeat N] [--skip-slow]
"""
import argparse
import statistics
import time

from oddcover import named
from oddcover.strong import (available_kernels, chi_strong, conflict_graph, has_strong_coloring,
                             max_clique, tabu_iterations, _kernel_module)
from oddcover.voltage import counterexample_family


def cases(skip_slow):
    heawood = named.heawood()
    tc = named.tutte_coxeter()
    yield "chi_strong(Heawood)", lambda k: chi_strong(heawood, kernel=k).chi_strong
    yield "has_strong(Tutte-Coxeter, 6)", lambda k: has_strong_coloring(tc, 6, kernel=k)[0]
    adj = conflict_graph(tc)
    pre = [(v, i) for i, v in enumerate(max_clique(adj))]
    # exhaustive refutation: the search visits the same nodes in both kernels
    yield "dsatur(Tutte-Coxeter, 6)", lambda k: _kernel_module(k).dsatur_search(tc.m, adj, 6, pre)[2]
    if not skip_slow:
        G3 = counterexample_family(3, with_coloring=False).graph
        a3 = conflict_graph(G3)
        # palette 5 is infeasible, so tabu search runs its full iteration budget
        yield "tabucol(G3, 5)", lambda k: _kernel_module(k).tabucol(G3.m, a3, 5, 1, tabu_iterations(G3.m))[1]
        yield "chi_strong(G3)", lambda k: chi_strong(G3, kernel=k).chi_strong


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-slow", action="store_true")
    args = ap.parse_args()
    kernels = available_kernels()
    print(f"kernels: {', '.join(kernels)}")
    print(f"{'case':32s}" + "".join(f"{k:>12s}" for k in kernels) + ("     speedup" if len(kernels) > 1 else ""))
    for name, fn in cases(args.skip_slow):
        times, answers = {}, {}
        for k in kernels:
            runs = []
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                answers[k] = fn(k)
                runs.append(time.perf_counter() - t0)
            times[k] = statistics.median(runs)
        assert len(set(map(repr, answers.values()))) == 1, f"kernels disagree on {name}: {answers}"
        row = f"{name:32s}" + "".join(f"{times[k]:11.4f}s" for k in kernels)
        if "cython" in times and "python" in times:
            row += f"{times['python'] / times['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
