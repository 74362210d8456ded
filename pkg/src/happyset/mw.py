"""Maximum Happy Set by dynamic programming over a modular parse tree.

For every node the table ``phi[w]`` holds the most happy vertices of the
node's induced subgraph under a selection of exactly ``w`` of its vertices.
A substitution node tries every choice of fully selected ("entire")
children, types each child by that choice, and merges the children with one
exact-weight knapsack per choice.
"""

from __future__ import annotations

import time

from .decomposition.modular import LEAF, ParseNode, ParseTree, modular_decompose
from .graph import MAXHS, Graph, HappySetSolution, InputError
from .knapsack import INFEASIBLE, FKnapsackInstance, reconstruct, solve_all_capacities

TYPE_I, TYPE_II, TYPE_III, TYPE_IV = "I", "II", "III", "IV"


def classify_subgraph_types(h: Graph, entire) -> list[str]:
    """Type of each metagraph vertex given the set of entire children.

    I: entire with all neighbors entire.  II: not entire, all neighbors
    entire.  III: entire otherwise.  IV: not entire otherwise.
    """
    entire = set(entire)
    types = []
    for i in range(h.n):
        surrounded = all(j in entire for j in h.adjacency[i])
        if i in entire:
            types.append(TYPE_I if surrounded else TYPE_III)
        else:
            types.append(TYPE_II if surrounded else TYPE_IV)
    type_two = [i for i, t in enumerate(types) if t == TYPE_II]
    for a in type_two:
        assert not any(h.has_edge(a, b) for b in type_two), "type II children must be independent"
    return types


def _items(types, tables, sizes, k):
    items = []
    for t, phi, s in zip(types, tables, sizes):
        if t == TYPE_I:
            items.append({s: s})
        elif t == TYPE_III:
            items.append({s: 0})
        elif t == TYPE_II:
            items.append({x: phi[x] for x in range(min(s - 1, k) + 1) if phi[x] is not INFEASIBLE})
        else:
            items.append({x: 0 for x in range(min(s - 1, k) + 1)})
    return items


class _NodeTable:
    __slots__ = ("phi", "choice", "work")

    def __init__(self, phi, choice, work):
        self.phi = phi
        self.choice = choice  # choice[w]: entire-set bitmask that achieved phi[w]
        self.work = work


def solve_substitution_node(h: Graph, child_tables, child_sizes, k: int) -> _NodeTable:
    """Table of a substitution node from its children's tables.

    Entire-set choices are scanned in increasing bitmask order; a later
    choice replaces an earlier one only when strictly better.
    """
    r = h.n
    cap = min(k, sum(child_sizes))
    phi = [INFEASIBLE] * (cap + 1)
    choice = [None] * (cap + 1)
    work = {"entire_sets": 0, "knapsack": 0}
    too_big = 0
    for i, s in enumerate(child_sizes):
        if s > cap:
            too_big |= 1 << i
    for mask in range(1 << r):
        if mask & too_big:
            continue
        entire = [i for i in range(r) if mask >> i & 1]
        if sum(child_sizes[i] for i in entire) > cap:
            continue
        work["entire_sets"] += 1
        types = classify_subgraph_types(h, entire)
        res = solve_all_capacities(FKnapsackInstance(_items(types, child_tables, child_sizes, k), cap))
        work["knapsack"] += res.work
        for w, val in enumerate(res.opt):
            if val is INFEASIBLE:
                continue
            if phi[w] is INFEASIBLE or val > phi[w]:
                phi[w] = val
                choice[w] = mask
    return _NodeTable(phi, choice, work)


def _leaf_table(k: int) -> _NodeTable:
    return _NodeTable([0, 1][: k + 1], [None, None][: k + 1], {"entire_sets": 0, "knapsack": 0})


def mw_tables(tree: ParseTree, k: int) -> dict[int, _NodeTable]:
    """Tables for every node of an already binarized tree, keyed by ``id(node)``."""
    tables: dict[int, _NodeTable] = {}
    for node in tree.nodes():
        if node.kind == LEAF:
            tables[id(node)] = _leaf_table(k)
            continue
        kids = node.children
        tables[id(node)] = solve_substitution_node(
            node.metagraph,
            [tables[id(c)].phi for c in kids],
            [c.size for c in kids],
            k,
        )
    return tables


def _reconstruct(node: ParseNode, w: int, tables, k: int) -> set[int]:
    chosen: set[int] = set()
    stack = [(node, w)]
    while stack:
        node, w = stack.pop()
        if w == 0:
            continue
        if node.kind == LEAF:
            chosen.add(node.vertex)
            continue
        table = tables[id(node)]
        mask = table.choice[w]
        kids = node.children
        entire = [i for i in range(len(kids)) if mask >> i & 1]
        types = classify_subgraph_types(node.metagraph, entire)
        sizes = [c.size for c in kids]
        items = _items(types, [tables[id(c)].phi for c in kids], sizes, k)
        xs = reconstruct(solve_all_capacities(FKnapsackInstance(items, len(table.phi) - 1)), w)
        assert xs is not INFEASIBLE
        for child, t, x in zip(kids, types, xs):
            if t in (TYPE_I, TYPE_III):
                chosen |= child.vertices
            elif t == TYPE_II:
                stack.append((child, x))
            else:
                chosen.update(sorted(child.vertices)[:x])
    return chosen


def solve_maxhs_mw(g: Graph, k: int, tree: ParseTree | None = None) -> HappySetSolution:
    """Optimal happy set of size ``k`` via the modular parse tree of ``g``.

    ``tree`` may be any valid parse tree of ``g`` (for instance one produced
    by a generator); by default the modular decomposition is used.  Series
    and parallel nodes are folded into two-child substitutions first.
    """
    if not 0 <= k <= g.n:
        raise InputError(f"k={k} outside 0..{g.n}")
    t0 = time.perf_counter()
    if g.n == 0:
        return HappySetSolution(MAXHS, frozenset(), 0, 0, {})
    if tree is None:
        tree = modular_decompose(g)
    elif tree.n != g.n:
        raise InputError("parse tree does not match the graph")
    work_tree = tree.binarized()
    tables = mw_tables(work_tree, k)
    root = tables[id(work_tree.root)]
    objective = root.phi[k]
    assert objective is not INFEASIBLE
    chosen = _reconstruct(work_tree.root, k, tables, k)
    stats = {
        "mw": tree.prime_width,
        "max_fanout": tree.max_fanout,
        "entire_sets": sum(t.work["entire_sets"] for t in tables.values()),
        "work_units": sum(t.work["knapsack"] for t in tables.values()),
        "dp_cells": sum(len(t.phi) for t in tables.values()),
        "time_ms": (time.perf_counter() - t0) * 1000.0,
    }
    sol = HappySetSolution(MAXHS, frozenset(chosen), k, objective, stats)
    sol.validate(g)
    return sol


def root_table(g: Graph, k: int, tree: ParseTree | None = None) -> list:
    """``phi[root, w]`` for ``w = 0..k``."""
    work_tree = (tree or modular_decompose(g)).binarized()
    return list(mw_tables(work_tree, k)[id(work_tree.root)].phi)
