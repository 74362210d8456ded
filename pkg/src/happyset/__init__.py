"""Exact solvers for Maximum Happy Set and Maximum Edge Happy Set."""

from .cd import solve_maxehs_cd
from .cw import solve_maxhs_cw
from .graph import (
    Graph,
    HappySetSolution,
    Infeasible,
    InputError,
    count_happy_edges,
    count_happy_vertices,
    induced_subgraph,
    parse_graph,
)
from .knapsack import INFEASIBLE
from .mw import solve_maxhs_mw
from .nd import solve_maxehs_nd
from .oracle import brute_maxehs, brute_maxhs

__all__ = [
    "INFEASIBLE",
    "Graph",
    "HappySetSolution",
    "Infeasible",
    "InputError",
    "brute_maxehs",
    "brute_maxhs",
    "count_happy_edges",
    "count_happy_vertices",
    "induced_subgraph",
    "parse_graph",
    "solve_maxehs_cd",
    "solve_maxehs_nd",
    "solve_maxhs_cw",
    "solve_maxhs_mw",
]
