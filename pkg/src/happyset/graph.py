"""Simple undirected graphs and happy-vertex / happy-edge counting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

MAXHS = "maxhs"
MAXEHS = "maxehs"


class InputError(ValueError):
    """Malformed input: bad vertex ids, bad files, k out of range."""


class Infeasible(Exception):
    """No happy set of the requested size exists."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adjacency", "_nbr_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"negative vertex count {n}")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges = frozenset(norm)
        self.adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbr_sets = tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class HappySetSolution:
    problem: str
    chosen: frozenset[int]
    k: int
    objective: int
    stats: dict = field(default_factory=dict, compare=False)

    def validate(self, g: Graph) -> None:
        """Raise AssertionError unless the certificate re-scores to the objective."""
        if len(self.chosen) != self.k:
            raise AssertionError(f"certificate has {len(self.chosen)} vertices, expected {self.k}")
        score = count_happy_vertices if self.problem == MAXHS else count_happy_edges
        got = score(g, self.chosen)
        if got != self.objective:
            raise AssertionError(f"certificate scores {got}, reported {self.objective}")


def _check_vertices(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise InputError(f"vertex {v!r} out of range for n={g.n}")
    return s


def count_happy_vertices(g: Graph, s: Iterable[int]) -> int:
    """Number of vertices whose closed neighborhood lies inside ``s``.

    Computed as ``n - |N[V \\ S]|``: a vertex is unhappy exactly when it is
    unselected or adjacent to an unselected vertex.
    """
    s = _check_vertices(g, s)
    unhappy: set[int] = set()
    for v in range(g.n):
        if v not in s:
            unhappy.add(v)
            unhappy.update(g.adjacency[v])
    return g.n - len(unhappy)


def count_happy_vertices_direct(g: Graph, s: Iterable[int]) -> int:
    s = _check_vertices(g, s)
    return sum(1 for v in s if g.neighbors(v) <= s)


def count_happy_edges(g: Graph, s: Iterable[int]) -> int:
    """Number of edges with both endpoints in ``s``."""
    s = _check_vertices(g, s)
    if len(s) < 2:
        return 0
    if len(s) * len(s) < 4 * g.m:
        return sum(len(g.neighbors(v) & s) for v in s) // 2
    return sum(1 for u, v in g.edges if u in s and v in s)


def induced_subgraph(g: Graph, x: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``x`` relabeled to ``0..|x|-1`` in increasing id order.

    Returns the subgraph and the map from original ids to new ids.
    """
    x = sorted(_check_vertices(g, x))
    relabel = {v: i for i, v in enumerate(x)}
    edges = [
        (relabel[u], relabel[v])
        for u in x
        for v in g.adjacency[u]
        if u < v and v in relabel
    ]
    return Graph(len(x), edges), relabel


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


# graph text format: "n m" then m lines "u v"; '#' lines are comments


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            rows.append((lineno, [int(p) for p in parts]))
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {raw!r}") from None
    if not rows:
        raise InputError("empty graph file")
    lineno, header = rows[0]
    if len(header) != 2:
        raise InputError(f"line {lineno}: header must be 'n m'")
    n, m = header
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header declares {m} edges, found {len(body)}")
    edges = []
    seen = set()
    for lineno, pair in body:
        if len(pair) != 2:
            raise InputError(f"line {lineno}: edge line must be 'u v'")
        u, v = pair
        if not (0 <= u < v < n):
            raise InputError(f"line {lineno}: edge must satisfy 0 <= u < v < n")
        if (u, v) in seen:
            raise InputError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())
