"""Maximum Happy Set by dynamic programming over a clique-width expression.

The table of node ``t`` maps ``(w, X)`` to a vector indexed by the target
label set ``T``: entry ``T`` is the most happy vertices carrying a label in
``T`` among selections of ``w`` vertices of ``G_t`` whose entire label
classes are exactly ``X``.  Label sets are bitmasks (label ``l`` is bit
``l-1``); unreachable entries hold ``-1`` inside the vectors and are exposed
as ``INFEASIBLE`` by :func:`entry`.
"""

from __future__ import annotations

import time

import numpy as np

from .decomposition.cwexpr import CwExpression, Introduce, Join, Relabel, Union
from .graph import MAXHS, Graph, HappySetSolution, InputError
from .knapsack import INFEASIBLE

NONE = -1


class CwTables:
    """Per-node tables for one expression and one size cap ``k``."""

    def __init__(self, width: int, k: int):
        self.width = width
        self.k = k
        self.full = (1 << width) - 1
        self.targets = np.arange(1 << width, dtype=np.int64)
        self.tables: dict[int, dict[tuple[int, int], np.ndarray]] = {}
        self.work = 0

    def entry(self, node, w: int, x: int, t: int):
        vec = self.tables[id(node)].get((w, x))
        if vec is None or vec[t] < 0:
            return INFEASIBLE
        return int(vec[t])


def _bit(label: int) -> int:
    return 1 << (label - 1)


def dp_introduce(label: int, width: int, k: int) -> dict:
    """Introduced vertex with ``label``: selected (w=1, all labels entire) or not."""
    b = _bit(label)
    full = (1 << width) - 1
    targets = np.arange(1 << width, dtype=np.int64)
    table = {(0, full & ~b): np.zeros(1 << width, dtype=np.int32)}
    if k >= 1:
        table[(1, full)] = ((targets & b) != 0).astype(np.int32)
    return table


def dp_union(t1: dict, t2: dict, k: int, counter: list | None = None) -> dict:
    """Combine disjoint children: sizes add, entire sets intersect, same targets."""
    out: dict[tuple[int, int], np.ndarray] = {}
    for (w1, x1), a1 in t1.items():
        ok1 = a1 >= 0
        for (w2, x2), a2 in t2.items():
            w = w1 + w2
            if w > k:
                continue
            if counter is not None:
                counter[0] += 1
            cand = np.where(ok1 & (a2 >= 0), a1 + a2, NONE)
            key = (w, x1 & x2)
            prev = out.get(key)
            out[key] = cand if prev is None else np.maximum(prev, cand)
    return {key: vec for key, vec in out.items() if (vec >= 0).any()}


def _relabel_targets(targets: np.ndarray, bi: int, bj: int) -> np.ndarray:
    # T' = T | {i} when j is a target, else T \ {i}
    return np.where(targets & bj, targets | bi, targets & ~bi)


def dp_relabel(child: dict, i: int, j: int, width: int) -> dict:
    """Relabel ``i`` to ``j``: label ``i`` empties out and is therefore entire."""
    if i == j:
        return dict(child)
    bi, bj = _bit(i), _bit(j)
    gather = _relabel_targets(np.arange(1 << width, dtype=np.int64), bi, bj)
    candidates = {(w, x | bi) for (w, x) in child} | {(w, (x | bi) & ~bj) for (w, x) in child}
    out = {}
    for w, x in sorted(candidates):
        if not x & bi:
            continue  # label i empty at t, so it must be entire
        if x & bj:
            sources = [x]
        else:
            sources = [x & ~bi, x, (x & ~bi) | bj]
        best = None
        for src in sources:
            vec = child.get((w, src))
            if vec is None:
                continue
            vec = vec[gather]
            best = vec if best is None else np.maximum(best, vec)
        if best is not None and (best >= 0).any():
            out[(w, x)] = best
    return out


def _join_targets(targets: np.ndarray, x: int, bi: int, bj: int) -> np.ndarray:
    drop = 0
    if not x & bj:
        drop |= bi
    if not x & bi:
        drop |= bj
    return targets & ~drop


def dp_join(child: dict, i: int, j: int, width: int) -> dict:
    """Join labels ``i`` and ``j``: a side counts as target only if the other side is entire."""
    bi, bj = _bit(i), _bit(j)
    targets = np.arange(1 << width, dtype=np.int64)
    return {(w, x): vec[_join_targets(targets, x, bi, bj)] for (w, x), vec in child.items()}


def cw_tables(e: CwExpression, k: int) -> CwTables:
    tabs = CwTables(e.width, k)
    counter = [0]
    for node in e.nodes():
        if isinstance(node, Introduce):
            table = dp_introduce(node.label, e.width, k)
        elif isinstance(node, Union):
            table = dp_union(tabs.tables[id(node.left)], tabs.tables[id(node.right)], k, counter)
        elif isinstance(node, Relabel):
            table = dp_relabel(tabs.tables[id(node.child)], node.src, node.dst, e.width)
        else:
            table = dp_join(tabs.tables[id(node.child)], node.a, node.b, e.width)
        counter[0] += len(table)
        tabs.tables[id(node)] = table
    tabs.work = counter[0]
    return tabs


def _reconstruct(tabs: CwTables, root, w: int, x: int, t: int) -> set[int]:
    chosen: set[int] = set()
    value = tabs.entry(root, w, x, t)
    stack = [(root, w, x, t, value)]
    while stack:
        node, w, x, t, value = stack.pop()
        if isinstance(node, Introduce):
            if w == 1:
                chosen.add(node.vertex)
            continue
        if isinstance(node, Union):
            left, right = tabs.tables[id(node.left)], tabs.tables[id(node.right)]
            found = None
            for (w1, x1), a1 in sorted(left.items()):
                if w1 > w or a1[t] < 0:
                    continue
                for (w2, x2), a2 in sorted(right.items()):
                    if w2 == w - w1 and x1 & x2 == x and a2[t] >= 0 and a1[t] + a2[t] == value:
                        found = (w1, x1, int(a1[t])), (w2, x2, int(a2[t]))
                        break
                if found:
                    break
            assert found is not None, "union backlink not found"
            (w1, x1, v1), (w2, x2, v2) = found
            stack.append((node.left, w1, x1, t, v1))
            stack.append((node.right, w2, x2, t, v2))
        elif isinstance(node, Relabel):
            bi, bj = _bit(node.src), _bit(node.dst)
            tc = int(_relabel_targets(np.int64(t), bi, bj))
            sources = [x] if x & bj else [x & ~bi, x, (x & ~bi) | bj]
            src = next(s for s in sources if tabs.entry(node.child, w, s, tc) == value)
            stack.append((node.child, w, src, tc, value))
        else:
            tc = int(_join_targets(np.int64(t), x, _bit(node.a), _bit(node.b)))
            stack.append((node.child, w, x, tc, value))
    return chosen


def solve_maxhs_cw(e: CwExpression, k: int) -> HappySetSolution:
    """Optimal happy set of size ``k`` in the graph built by ``e``."""
    g = e.evaluate().to_graph()
    if not 0 <= k <= g.n:
        raise InputError(f"k={k} outside 0..{g.n}")
    t0 = time.perf_counter()
    tabs = cw_tables(e, k)
    root = tabs.tables[id(e.root)]
    best_x, best = None, -1
    for (w, x), vec in sorted(root.items()):
        if w == k and vec[tabs.full] > best:
            best_x, best = x, int(vec[tabs.full])
    assert best_x is not None
    chosen = _reconstruct(tabs, e.root, k, best_x, tabs.full)
    stats = {
        "cw": e.width,
        "work_units": tabs.work,
        "dp_cells": sum(len(t) for t in tabs.tables.values()) << e.width,
        "time_ms": (time.perf_counter() - t0) * 1000.0,
    }
    sol = HappySetSolution(MAXHS, frozenset(chosen), k, best, stats)
    sol.validate(g)
    return sol


def graph_of(e: CwExpression) -> Graph:
    return e.evaluate().to_graph()
