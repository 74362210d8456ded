"""Twin classes (neighborhood diversity) and the quotient graph on them."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, InputError

CLIQUE = "clique"
INDEPENDENT = "independent"


@dataclass(frozen=True)
class TwinPartition:
    modules: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    quotient: Graph

    @property
    def width(self) -> int:
        return len(self.modules)

    @property
    def q(self) -> list[int]:
        return [1 if kind == CLIQUE else 0 for kind in self.kinds]

    def adjacency_matrix(self) -> list[list[int]]:
        d = self.width
        return [[1 if self.quotient.has_edge(i, j) else 0 for j in range(d)] for i in range(d)]

    def module_of(self) -> dict[int, int]:
        return {v: i for i, mod in enumerate(self.modules) for v in mod}

    def expand(self) -> Graph:
        """Rebuild the graph from modules, kinds and quotient adjacency."""
        edges = []
        for mod, kind in zip(self.modules, self.kinds):
            if kind == CLIQUE:
                edges.extend((u, v) for i, u in enumerate(mod) for v in mod[i + 1:])
        for a, b in self.quotient.edges:
            edges.extend((u, v) for u in self.modules[a] for v in self.modules[b])
        n = sum(len(mod) for mod in self.modules)
        return Graph(n, edges)


def are_twins(g: Graph, u: int, v: int) -> bool:
    return g.neighbors(u) - {v} == g.neighbors(v) - {u}


def compute_twin_partition(g: Graph) -> TwinPartition:
    """Coarsest partition of the vertices into classes of mutual twins.

    False twins share open neighborhoods, true twins share closed ones; both
    groupings are merged with a union-find and the result is re-checked
    pairwise.  Modules are ordered by smallest member.  A singleton module is
    reported as a clique.
    """
    if g.n < 1:
        raise InputError("twin partition needs at least one vertex")
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for key in (g.neighbors, g.closed_neighbors):
        first: dict[frozenset[int], int] = {}
        for v in range(g.n):
            rep = first.setdefault(key(v), v)
            ra, rb = find(rep), find(v)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    modules = sorted((tuple(mod) for mod in groups.values()), key=lambda mod: mod[0])

    kinds = []
    for mod in modules:
        for i, u in enumerate(mod):
            for v in mod[i + 1:]:
                if not are_twins(g, u, v):
                    raise AssertionError(f"vertices {u} and {v} merged but are not twins")
        if len(mod) == 1 or g.has_edge(mod[0], mod[1]):
            kinds.append(CLIQUE)
        else:
            kinds.append(INDEPENDENT)

    quotient = Graph(
        len(modules),
        [
            (a, b)
            for a in range(len(modules))
            for b in range(a + 1, len(modules))
            if g.has_edge(modules[a][0], modules[b][0])
        ],
    )
    return TwinPartition(tuple(modules), tuple(kinds), quotient)
