"""Seeded instance families."""

from __future__ import annotations

import random

from .decomposition.modular import ParseNode, ParseTree
from .graph import Graph, InputError


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(r: int, rng: random.Random, p_extra: float = 0.4) -> Graph:
    edges = set()
    for v in range(1, r):
        edges.add((rng.randrange(v), v))
    for u in range(r):
        for v in range(u + 1, r):
            if rng.random() < p_extra:
                edges.add((u, v))
    return Graph(r, edges)


def bounded_mw(n: int, width: int, seed: int) -> tuple[Graph, ParseTree]:
    """Graph with a parse tree whose substitution nodes have ``width`` children.

    The tree is a spine: each node substitutes ``width - 1`` fresh vertices
    and the previous spine node into a random connected metagraph; the
    bottom node absorbs the remainder.  Vertex ids are shuffled.
    """
    if width < 2 or n < width:
        raise InputError("need 2 <= width <= n")
    rng = random.Random(seed)
    ids = list(range(n))
    rng.shuffle(ids)
    it = iter(ids)
    bottom = 2 + (n - 2) % (width - 1)
    kids = [ParseNode.leaf(next(it)) for _ in range(bottom)]
    node = ParseNode.substitution(random_connected_graph(len(kids), rng), kids)
    placed = bottom
    while placed < n:
        kids = [ParseNode.leaf(next(it)) for _ in range(width - 1)]
        kids.insert(rng.randrange(width), node)
        node = ParseNode.substitution(random_connected_graph(width, rng), kids)
        placed += width - 1
    tree = ParseTree(node, n)
    return tree.evaluate(), tree


def parse_clique_sizes(spec: str) -> list[int]:
    """``"3x4"`` -> three cliques of four; ``"2,3,5"`` -> listed sizes."""
    if "x" in spec:
        count, size = spec.split("x")
        return [int(size)] * int(count)
    return [int(s) for s in spec.split(",") if s]


def cluster_apex(clique_sizes: list[int], apex: int, seed: int, p: float = 0.5) -> Graph:
    """Disjoint cliques plus ``apex`` extra vertices with random attachments.

    The apex vertices (the last ``apex`` ids) form a cluster deletion set.
    """
    rng = random.Random(seed)
    edges = []
    start = 0
    for size in clique_sizes:
        edges.extend((start + i, start + j) for i in range(size) for j in range(i + 1, size))
        start += size
    base = start
    n = base + apex
    for a in range(base, n):
        for v in range(a):
            if rng.random() < p:
                edges.append((v, a))
    return Graph(n, edges)
