"""Maximum Edge Happy Set over a cluster deletion set.

Guess the part ``S'`` of the solution inside the deletion set ``X``.  With
``S'`` fixed, each clique ``C_i`` of ``G - X`` is best filled greedily by
vertices with the most neighbors in ``S'``, so its contribution is a
function of the count taken from it alone; an exact-weight knapsack then
splits the remaining budget between cliques.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .decomposition.cluster import (
    ClusterDeletionSet,
    make_cluster_deletion_set,
    minimum_cluster_deletion_set,
)
from .graph import MAXEHS, Graph, HappySetSolution, InputError, count_happy_edges
from .knapsack import INFEASIBLE, FKnapsackInstance, reconstruct, solve_all_capacities

AUTO = "auto"


@dataclass(frozen=True)
class ClusterValueFunctions:
    orders: tuple[tuple[int, ...], ...]
    tables: tuple[tuple[int, ...], ...]


def build_value_functions(g: Graph, clusters, s_prime) -> ClusterValueFunctions:
    """Greedy order and value table per cluster for a fixed ``s_prime``.

    ``f(j) = f(j-1) + |N(v_j) & S'| + (j - 1)``; ties in the order go to the
    smaller vertex id.
    """
    s_prime = frozenset(s_prime)
    orders, tables = [], []
    for cluster in clusters:
        hits = {v: len(g.neighbors(v) & s_prime) for v in cluster}
        order = sorted(cluster, key=lambda v: (-hits[v], v))
        f = [0]
        for j, v in enumerate(order, 1):
            f.append(f[-1] + hits[v] + j - 1)
        orders.append(tuple(order))
        tables.append(tuple(f))
    return ClusterValueFunctions(tuple(orders), tuple(tables))


@dataclass(frozen=True)
class FixedSPrimeResult:
    objective: int
    knapsack_value: int
    chosen: frozenset[int]
    counts: tuple[int, ...]


def solve_for_fixed_sprime(g: Graph, x: ClusterDeletionSet, s_prime, k: int):
    """Best extension of ``s_prime`` to ``k`` vertices using clusters only, or ``INFEASIBLE``."""
    s_prime = frozenset(s_prime)
    if not s_prime <= x.x:
        raise InputError("S' must lie inside the deletion set")
    if len(s_prime) > k:
        raise InputError("S' larger than k")
    vf = build_value_functions(g, x.clusters, s_prime)
    items = [dict(enumerate(f)) for f in vf.tables]
    res = solve_all_capacities(FKnapsackInstance(items, k - len(s_prime)))
    counts = reconstruct(res, k - len(s_prime))
    if counts is INFEASIBLE:
        return INFEASIBLE
    chosen = set(s_prime)
    for order, c in zip(vf.orders, counts):
        chosen.update(order[:c])
    value = res.opt[k - len(s_prime)]
    base = count_happy_edges(g, s_prime)
    return FixedSPrimeResult(base + value, value, frozenset(chosen), counts)


def resolve_deletion_set(g: Graph, x) -> ClusterDeletionSet:
    if x is None or x == AUTO:
        return minimum_cluster_deletion_set(g)
    if isinstance(x, ClusterDeletionSet):
        return make_cluster_deletion_set(g, x.x)
    return make_cluster_deletion_set(g, x)


def solve_maxehs_cd(g: Graph, k: int, x=AUTO) -> HappySetSolution:
    """Optimal ``k``-set for happy edges given (or finding) a cluster deletion set.

    ``S'`` candidates are enumerated by increasing size, lexicographically
    within a size; the first strictly best one is kept.
    """
    if not 0 <= k <= g.n:
        raise InputError(f"k={k} outside 0..{g.n}")
    t0 = time.perf_counter()
    cds = resolve_deletion_set(g, x)
    members = sorted(cds.x)
    best = None
    subsets = 0
    for size in range(min(k, len(members)) + 1):
        for s_prime in itertools.combinations(members, size):
            subsets += 1
            res = solve_for_fixed_sprime(g, cds, s_prime, k)
            if res is INFEASIBLE:
                continue
            if best is None or res.objective > best.objective:
                best = res
    assert best is not None
    stats = {
        "cd": cds.size,
        "deletion_set": members,
        "sprime_subsets": subsets,
        "work_units": subsets,
        "time_ms": (time.perf_counter() - t0) * 1000.0,
    }
    sol = HappySetSolution(MAXEHS, best.chosen, k, best.objective, stats)
    sol.validate(g)
    return sol

