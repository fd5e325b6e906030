"""Graph coloring solver: clique lower bounds, low-degree reduction and
core/mixed-degree greedy coloring, with a multi-seed benchmark CLI."""

from ._core import (
    Graph,
    SolveResult,
    brute_force_chromatic,
    core_numbers,
    load_graph,
    max_clique,
    parse_graph,
    solve,
    verify_coloring,
)

__all__ = [
    "Graph",
    "SolveResult",
    "brute_force_chromatic",
    "core_numbers",
    "load_graph",
    "max_clique",
    "parse_graph",
    "solve",
    "verify_coloring",
]
