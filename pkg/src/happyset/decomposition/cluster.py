"""Cluster vertex deletion by bounded branching on induced P3s."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..graph import Graph, InputError


@dataclass(frozen=True)
class ClusterDeletionSet:
    x: frozenset[int]
    clusters: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.x)


def find_induced_p3(g: Graph, removed: frozenset[int] = frozenset()):
    """Lexicographically smallest sorted triple inducing a path, as (middle, end, end)."""
    alive = [v for v in range(g.n) if v not in removed]
    for ia, a in enumerate(alive):
        na = g.neighbors(a)
        for ib in range(ia + 1, len(alive)):
            b = alive[ib]
            nb = g.neighbors(b)
            ab = b in na
            for c in alive[ib + 1:]:
                ac, bc = c in na, c in nb
                if ab + ac + bc != 2:
                    continue
                if not bc:
                    return a, b, c
                if not ac:
                    return b, a, c
                return c, a, b
    return None


def cluster_components(g: Graph, x: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Connected components of ``G - x``, ordered by smallest member."""
    x = frozenset(x)
    seen = set(x)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def is_cluster_deletion_set(g: Graph, x: Iterable[int]) -> bool:
    x = frozenset(x)
    for comp in cluster_components(g, x):
        for i, u in enumerate(comp):
            for v in comp[i + 1:]:
                if not g.has_edge(u, v):
                    return False
    return True


def make_cluster_deletion_set(g: Graph, x: Iterable[int]) -> ClusterDeletionSet:
    x = frozenset(x)
    for v in x:
        if not 0 <= v < g.n:
            raise InputError(f"deletion-set vertex {v} out of range for n={g.n}")
    if not is_cluster_deletion_set(g, x):
        raise InputError(f"{sorted(x)} is not a cluster deletion set")
    return ClusterDeletionSet(x, cluster_components(g, x))


def _branch(g: Graph, removed: frozenset[int], budget: int):
    p3 = find_induced_p3(g, removed)
    if p3 is None:
        return removed
    if budget == 0:
        return None
    middle, end1, end2 = p3
    for v in (middle, end1, end2):
        found = _branch(g, removed | {v}, budget - 1)
        if found is not None:
            return found
    return None


def compute_cluster_deletion_set(g: Graph, budget: int):
    """Minimum cluster deletion set of size at most ``budget``, else ``None``.

    Budgets are tried in increasing order so the first hit is minimum.  Each
    level branches on the three vertices of the smallest induced P3, middle
    vertex first.
    """
    if budget < 0:
        raise InputError("budget must be non-negative")
    for b in range(budget + 1):
        found = _branch(g, frozenset(), b)
        if found is not None:
            return ClusterDeletionSet(found, cluster_components(g, found))
    return None


def minimum_cluster_deletion_set(g: Graph) -> ClusterDeletionSet:
    result = compute_cluster_deletion_set(g, g.n)
    assert result is not None
    return result
