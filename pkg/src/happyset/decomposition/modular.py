"""Modular decomposition into a substitution parse tree.

Every internal node substitutes its children into a metagraph.  Parallel and
series nodes carry edgeless and complete metagraphs; everything else is
reported as ``prime``.  The decomposition is the plain recursive one:
split on components, then on co-components, otherwise group vertices into
maximal strong modules by growing the smallest module around each pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from ..graph import Graph, InputError

LEAF = "leaf"
PARALLEL = "parallel"
SERIES = "series"
PRIME = "prime"


@dataclass(frozen=True, eq=False)
class ParseNode:
    kind: str
    vertices: frozenset[int]
    children: tuple["ParseNode", ...] = ()
    metagraph: Graph | None = None
    vertex: int | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def fanout(self) -> int:
        return len(self.children)

    @classmethod
    def leaf(cls, v: int) -> "ParseNode":
        return cls(LEAF, frozenset([v]), vertex=v)

    @classmethod
    def substitution(cls, metagraph: Graph, children) -> "ParseNode":
        children = tuple(children)
        if metagraph.n != len(children):
            raise InputError("metagraph size must match the number of children")
        if len(children) < 2:
            raise InputError("substitution node needs at least two children")
        verts: set[int] = set()
        for c in children:
            if verts & c.vertices:
                raise InputError("child modules overlap")
            verts |= c.vertices
        r = len(children)
        if metagraph.m == 0:
            kind = PARALLEL
        elif metagraph.m == r * (r - 1) // 2:
            kind = SERIES
        else:
            kind = PRIME
        return cls(kind, frozenset(verts), children, metagraph)


def postorder(root: ParseNode) -> Iterator[ParseNode]:
    stack = [(root, False)]
    while stack:
        node, done = stack.pop()
        if done or not node.children:
            yield node
            continue
        stack.append((node, True))
        for c in reversed(node.children):
            stack.append((c, False))


@dataclass(frozen=True, eq=False)
class ParseTree:
    root: ParseNode
    n: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def nodes(self) -> Iterator[ParseNode]:
        return postorder(self.root)

    @property
    def prime_width(self) -> int:
        """Largest fan-out over prime nodes (0 when the graph is a cograph)."""
        return max((nd.fanout for nd in self.nodes() if nd.kind == PRIME), default=0)

    @property
    def max_fanout(self) -> int:
        return max((nd.fanout for nd in self.nodes()), default=0)

    def evaluate(self) -> Graph:
        edges: list[tuple[int, int]] = []
        for node in self.nodes():
            if node.metagraph is None:
                continue
            for a, b in node.metagraph.edges:
                for u in node.children[a].vertices:
                    for v in node.children[b].vertices:
                        edges.append((u, v))
        return Graph(self.n, edges)

    def validate(self, g: Graph) -> None:
        """Raise AssertionError if the tree is not a parse tree of ``g``."""
        assert self.n == g.n, "vertex count mismatch"
        assert self.root.vertices == frozenset(range(g.n)), "root must cover all vertices"
        leaves = sum(1 for nd in self.nodes() if nd.kind == LEAF)
        assert leaves == g.n, f"{leaves} leaves for {g.n} vertices"
        for node in self.nodes():
            if node.kind == LEAF:
                continue
            union: set[int] = set()
            for c in node.children:
                assert not (union & c.vertices), "children overlap"
                union |= c.vertices
                assert is_module(g, c.vertices), f"{sorted(c.vertices)} is not a module"
            assert union == node.vertices, "children do not partition the node"
        assert self.evaluate() == g, "tree does not evaluate to the graph"

    def binarized(self) -> "ParseTree":
        """Same tree with every series/parallel node folded into two-child nodes."""
        built: dict[int, ParseNode] = {}
        for node in self.nodes():
            if node.kind == LEAF:
                built[id(node)] = node
                continue
            kids = [built[id(c)] for c in node.children]
            if node.kind == PRIME or len(kids) == 2:
                built[id(node)] = ParseNode.substitution(node.metagraph, kids)
                continue
            pair = Graph(2, [(0, 1)] if node.kind == SERIES else [])
            acc = kids[0]
            for c in kids[1:]:
                acc = ParseNode.substitution(pair, (acc, c))
            built[id(node)] = acc
        return ParseTree(built[id(self.root)], self.n)

    def to_json(self) -> dict:
        out: dict[int, dict] = {}
        for node in self.nodes():
            if node.kind == LEAF:
                out[id(node)] = {"vertex": node.vertex}
            else:
                out[id(node)] = {
                    "kind": node.kind,
                    "metagraph": [list(e) for e in node.metagraph.sorted_edges()],
                    "children": [out.pop(id(c)) for c in node.children],
                }
        return {"n": self.n, "prime_width": self.prime_width, "root": out[id(self.root)]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: dict) -> "ParseTree":
        def build(d: dict) -> ParseNode:
            if "vertex" in d:
                return ParseNode.leaf(int(d["vertex"]))
            kids = [build(c) for c in d["children"]]
            return ParseNode.substitution(Graph(len(kids), d["metagraph"]), kids)

        return cls(build(data["root"]), int(data["n"]))


def is_module(g: Graph, module) -> bool:
    module = frozenset(module)
    outside = None
    for v in module:
        ext = g.neighbors(v) - module
        if outside is None:
            outside = ext
        elif ext != outside:
            return False
    return True


def _components(members: list[int], adjacent) -> list[list[int]]:
    remaining = set(members)
    comps = []
    for start in members:
        if start not in remaining:
            continue
        remaining.discard(start)
        comp, frontier = [start], [start]
        while frontier:
            u = frontier.pop()
            nxt = [v for v in remaining if adjacent(u, v)]
            for v in nxt:
                remaining.discard(v)
            comp.extend(nxt)
            frontier.extend(nxt)
        comps.append(sorted(comp))
    return comps


def _module_closure(masks: dict[int, int], members: list[int], seed: int) -> int:
    """Smallest module of the subgraph on ``members`` containing bitmask ``seed``."""
    s = seed
    size = s.bit_count()
    changed = True
    while changed:
        changed = False
        for x in members:
            bit = 1 << x
            if s & bit:
                continue
            hits = (masks[x] & s).bit_count()
            if 0 < hits < size:
                s |= bit
                size += 1
                changed = True
    return s


def _strong_classes(masks: dict[int, int], members: list[int]) -> list[list[int]]:
    full = 0
    for v in members:
        full |= 1 << v
    left = list(members)
    classes = []
    while left:
        u = left[0]
        cls_ = [u]
        for v in left[1:]:
            if _module_closure(masks, members, (1 << u) | (1 << v)) != full:
                cls_.append(v)
        classes.append(cls_)
        taken = set(cls_)
        left = [v for v in left if v not in taken]
    return classes


def modular_decompose(g: Graph) -> ParseTree:
    if g.n < 1:
        raise InputError("modular decomposition needs at least one vertex")
    masks_all = {v: sum(1 << u for u in g.adjacency[v]) for v in range(g.n)}

    def build(members: list[int]) -> ParseNode:
        if len(members) == 1:
            return ParseNode.leaf(members[0])
        member_mask = sum(1 << v for v in members)
        masks = {v: masks_all[v] & member_mask for v in members}
        comps = _components(members, lambda u, v: g.has_edge(u, v))
        if len(comps) == 1:
            comps = _components(members, lambda u, v: not g.has_edge(u, v))
            if len(comps) == 1:
                comps = _strong_classes(masks, members)
        comps.sort(key=lambda c: c[0])
        kids = [build(c) for c in comps]
        reps = [c[0] for c in comps]
        meta = Graph(
            len(comps),
            [(a, b) for a in range(len(reps)) for b in range(a + 1, len(reps)) if g.has_edge(reps[a], reps[b])],
        )
        return ParseNode.substitution(meta, kids)

    return ParseTree(build(list(range(g.n))), g.n)
