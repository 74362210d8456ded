"""Maximum Edge Happy Set through twin classes and a bounded integer QP.

Choosing ``x_i`` vertices from twin class ``M_i`` yields
``h(x) = sum_i q_i*C(x_i, 2) + sum_{i<j} A_ij*x_i*x_j`` happy edges, where
``q_i`` marks clique classes and ``A`` is the quotient adjacency.  The QP
maximizes ``f(x) = x^T (A + diag(q)) x - q^T x = 2 h(x)`` over the box
``0 <= x_i <= |M_i|`` with ``sum x_i = k``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .decomposition.twins import TwinPartition, compute_twin_partition
from .graph import MAXEHS, Graph, HappySetSolution, Infeasible, InputError
from .knapsack import INFEASIBLE


@dataclass(frozen=True)
class IqpInstance:
    q: tuple[int, ...]
    a: tuple[tuple[int, ...], ...]
    upper: tuple[int, ...]
    k: int

    @property
    def d(self) -> int:
        return len(self.q)

    def quadratic_matrix(self) -> list[list[int]]:
        """``A + diag(q)``: the matrix of the quadratic form of ``f``."""
        return [[self.a[i][j] + (self.q[i] if i == j else 0) for j in range(self.d)] for i in range(self.d)]

    def objective(self, x) -> int:
        quad = self.quadratic_matrix()
        d = self.d
        return sum(x[i] * quad[i][j] * x[j] for i in range(d) for j in range(d)) - sum(
            qi * xi for qi, xi in zip(self.q, x)
        )

    def happy_edges(self, x) -> int:
        d = self.d
        internal = sum(qi * xi * (xi - 1) // 2 for qi, xi in zip(self.q, x))
        external = sum(self.a[i][j] * x[i] * x[j] for i in range(d) for j in range(i + 1, d))
        return internal + external


@dataclass(frozen=True)
class IqpSolution:
    x: tuple[int, ...]
    objective_f: int
    happy_edges: int
    search_nodes: int = 0


def build_iqp(g: Graph, k: int, partition: TwinPartition | None = None) -> IqpInstance:
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    tp = partition or compute_twin_partition(g)
    return IqpInstance(
        q=tuple(tp.q),
        a=tuple(tuple(row) for row in tp.adjacency_matrix()),
        upper=tuple(len(m) for m in tp.modules),
        k=k,
    )


def solve_iqp_bounded(inst: IqpInstance):
    """Exact maximizer of ``f`` by depth-first search over ``x_1, x_2, ...``.

    Values are tried in increasing order and only strict improvements are
    kept, so the lexicographically smallest maximizer wins.  A branch is cut
    when its bound ``h_partial + C(r, 2) + r * assigned`` (``r`` = budget
    left) cannot beat the incumbent; every off-diagonal coefficient is at
    most 1, so the bound is admissible.  Returns ``INFEASIBLE`` when the box
    cannot hold ``k`` vertices.
    """
    d, k = inst.d, inst.k
    if sum(inst.upper) < k:
        return INFEASIBLE
    suffix_cap = [0] * (d + 1)
    for i in range(d - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + inst.upper[i]
    best_val = -1
    best_x: list[int] | None = None
    x = [0] * d
    nodes = 0

    def visit(i: int, assigned: int, partial: int) -> None:
        nonlocal best_val, best_x, nodes
        nodes += 1
        rem = k - assigned
        if i == d:
            if rem == 0 and partial > best_val:
                best_val, best_x = partial, list(x)
            return
        if best_x is not None and partial + rem * (rem - 1) // 2 + rem * assigned <= best_val:
            return
        lo = max(0, rem - suffix_cap[i + 1])
        hi = min(inst.upper[i], rem)
        gain_pair = sum(inst.a[i][j] * x[j] for j in range(i))
        for xi in range(lo, hi + 1):
            x[i] = xi
            gain = inst.q[i] * xi * (xi - 1) // 2 + xi * gain_pair
            visit(i + 1, assigned + xi, partial + gain)
        x[i] = 0

    visit(0, 0, 0)
    assert best_x is not None
    f = inst.objective(best_x)
    h = inst.happy_edges(best_x)
    assert f == 2 * h == 2 * best_val, "objective must equal twice the happy-edge count"
    return IqpSolution(tuple(best_x), f, h, nodes)


def solve_maxehs_nd(g: Graph, k: int) -> HappySetSolution:
    """Best ``k``-set for happy edges; takes the lowest ids inside each class."""
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    if k > g.n:
        raise Infeasible(f"k={k} exceeds the {g.n} vertices of the graph")
    t0 = time.perf_counter()
    if g.n == 0:
        return HappySetSolution(MAXEHS, frozenset(), 0, 0, {})
    tp = compute_twin_partition(g)
    sol = solve_iqp_bounded(build_iqp(g, k, tp))
    if sol is INFEASIBLE:
        raise Infeasible(f"no {k}-subset exists")
    chosen = frozenset(v for mod, xi in zip(tp.modules, sol.x) for v in mod[:xi])
    stats = {
        "nd": tp.width,
        "x": list(sol.x),
        "work_units": sol.search_nodes,
        "time_ms": (time.perf_counter() - t0) * 1000.0,
    }
    out = HappySetSolution(MAXEHS, chosen, k, sol.happy_edges, stats)
    out.validate(g)
    return out
