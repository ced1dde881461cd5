"""Strong edge colourings, Kneser and odd graphs, and covering projections.

The hot search kernels live in a compiled extension (``oddcover._ckernel``);
``oddcover.strong.default_kernel()`` reports which one is active.  Set
``ODDCOVER_PURE_PYTHON=1`` to force the pure-Python twin.
"""
from .graph import DartGraph, GraphError, SpanningTree, build_graph, girth, spanning_tree
from .graphio import parse_graph, parse_graph6, write_graph6, write_dot
from .kneser import canonical_coloring, kneser_graph, odd_graph
from .strong import (EdgeColoring, SolveResult, chi_strong, default_kernel, enumerate_strong,
                     has_strong_coloring, is_strong, lift_coloring)
from .cover import CoveringMap, cover_from_strong_coloring, verify_cover
from .voltage import Perm, VoltageAssignment, counterexample_family, derived_lift, t_reduction
from .petersen import PetersenColoring, equivalence_report

__version__ = "0.1.0"
