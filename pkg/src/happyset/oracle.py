"""Exhaustive k-subset enumeration; ground truth for every other solver."""

from __future__ import annotations

import itertools
import math
import os

from .graph import (
    MAXEHS,
    MAXHS,
    Graph,
    HappySetSolution,
    InputError,
    count_happy_edges,
    count_happy_vertices,
)

DEFAULT_CAP = 5_000_000


class OracleCapExceeded(InputError):
    pass


def oracle_cap() -> int:
    return int(os.environ.get("HAPPYSET_ORACLE_CAP", DEFAULT_CAP))


def _brute(g: Graph, k: int, problem: str, score, cap: int | None) -> HappySetSolution:
    if not 0 <= k <= g.n:
        raise InputError(f"k={k} outside 0..{g.n}")
    cap = oracle_cap() if cap is None else cap
    count = math.comb(g.n, k)
    if count > cap:
        raise OracleCapExceeded(f"C({g.n},{k}) = {count} subsets exceeds the cap {cap}")
    best, best_set = -1, None
    for s in itertools.combinations(range(g.n), k):
        val = score(g, s)
        if val > best:
            best, best_set = val, s
    return HappySetSolution(problem, frozenset(best_set), k, best, {"subsets": count})


def brute_maxhs(g: Graph, k: int, cap: int | None = None) -> HappySetSolution:
    return _brute(g, k, MAXHS, count_happy_vertices, cap)


def brute_maxehs(g: Graph, k: int, cap: int | None = None) -> HappySetSolution:
    return _brute(g, k, MAXEHS, count_happy_edges, cap)
