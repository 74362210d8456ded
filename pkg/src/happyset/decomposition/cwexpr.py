"""Clique-width expressions: model, text format, evaluation, and a converter
from modular-decomposition parse trees.

Text format, one node per line, children defined before use, root last::

    <id> I <vertex> <label>
    <id> U <left-id> <right-id>
    <id> R <from> <to> <child-id>
    <id> J <label-a> <label-b> <child-id>
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union as TypingUnion

from ..graph import Graph, InputError
from .modular import LEAF, PARALLEL, SERIES, ParseNode, ParseTree

FINISHED = 1


class CwValidationError(InputError):
    pass


@dataclass(frozen=True, eq=False)
class Introduce:
    vertex: int
    label: int


@dataclass(frozen=True, eq=False)
class Union:
    left: "CwNode"
    right: "CwNode"


@dataclass(frozen=True, eq=False)
class Relabel:
    src: int
    dst: int
    child: "CwNode"


@dataclass(frozen=True, eq=False)
class Join:
    a: int
    b: int
    child: "CwNode"


CwNode = TypingUnion[Introduce, Union, Relabel, Join]


def children(node: CwNode) -> tuple:
    if isinstance(node, Introduce):
        return ()
    if isinstance(node, Union):
        return (node.left, node.right)
    return (node.child,)


def postorder(root: CwNode) -> Iterator[CwNode]:
    stack = [(root, False)]
    while stack:
        node, done = stack.pop()
        kids = children(node)
        if done or not kids:
            yield node
            continue
        stack.append((node, True))
        for c in reversed(kids):
            stack.append((c, False))


@dataclass(frozen=True)
class LabeledGraph:
    labels: dict  # vertex -> label
    edges: frozenset

    def to_graph(self) -> Graph:
        n = len(self.labels)
        if set(self.labels) != set(range(n)):
            raise CwValidationError("introduced vertices are not exactly 0..n-1")
        return Graph(n, self.edges)

    def label_classes(self) -> dict[int, set[int]]:
        out: dict[int, set[int]] = {}
        for v, lab in self.labels.items():
            out.setdefault(lab, set()).add(v)
        return out


class CwExpression:
    """A validated expression tree with labels ``1..width``.

    Identity relabels are dropped on construction.
    """

    def __init__(self, root: CwNode, width: int | None = None):
        root = _strip_identity_relabels(root)
        used = 0
        seen: set[int] = set()
        for node in postorder(root):
            if isinstance(node, Introduce):
                if node.vertex in seen:
                    raise CwValidationError(f"vertex {node.vertex} introduced twice")
                if node.vertex < 0:
                    raise CwValidationError(f"negative vertex id {node.vertex}")
                seen.add(node.vertex)
                labs = (node.label,)
            elif isinstance(node, Relabel):
                labs = (node.src, node.dst)
            elif isinstance(node, Join):
                if node.a == node.b:
                    raise CwValidationError(f"join of label {node.a} with itself")
                labs = (node.a, node.b)
            elif isinstance(node, Union):
                labs = ()
            else:
                raise CwValidationError(f"unknown node {node!r}")
            for lab in labs:
                if lab < 1:
                    raise CwValidationError(f"label {lab} out of range")
                used = max(used, lab)
        if width is None:
            width = used
        elif used > width:
            raise CwValidationError(f"label {used} exceeds declared width {width}")
        self.root = root
        self.width = width
        self.vertices = frozenset(seen)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def nodes(self) -> Iterator[CwNode]:
        return postorder(self.root)

    def evaluate(self) -> LabeledGraph:
        return evaluate_cw_expression(self)

    def dumps(self) -> str:
        ids: dict[int, int] = {}
        lines = []
        for node in self.nodes():
            i = len(ids)
            ids[id(node)] = i
            if isinstance(node, Introduce):
                lines.append(f"{i} I {node.vertex} {node.label}")
            elif isinstance(node, Union):
                lines.append(f"{i} U {ids[id(node.left)]} {ids[id(node.right)]}")
            elif isinstance(node, Relabel):
                lines.append(f"{i} R {node.src} {node.dst} {ids[id(node.child)]}")
            else:
                lines.append(f"{i} J {node.a} {node.b} {ids[id(node.child)]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "CwExpression":
        nodes: dict[int, CwNode] = {}
        used: set[int] = set()
        last = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            try:
                nid, kind, args = int(parts[0]), parts[1], [int(p) for p in parts[2:]]
            except (IndexError, ValueError):
                raise CwValidationError(f"line {lineno}: cannot parse {raw!r}") from None
            if nid in nodes:
                raise CwValidationError(f"line {lineno}: duplicate node id {nid}")
            arity = {"I": 2, "U": 2, "R": 3, "J": 3}.get(kind)
            if arity is None or len(args) != arity:
                raise CwValidationError(f"line {lineno}: bad node {raw!r}")

            def ref(x: int) -> CwNode:
                if x not in nodes:
                    raise CwValidationError(f"line {lineno}: unknown node id {x}")
                if x in used:
                    raise CwValidationError(f"line {lineno}: node {x} used twice")
                used.add(x)
                return nodes[x]

            if kind == "I":
                node = Introduce(args[0], args[1])
            elif kind == "U":
                node = Union(ref(args[0]), ref(args[1]))
            elif kind == "R":
                node = Relabel(args[0], args[1], ref(args[2]))
            else:
                node = Join(args[0], args[1], ref(args[2]))
            nodes[nid] = node
            last = nid
        if last is None:
            raise CwValidationError("empty expression")
        dangling = set(nodes) - used - {last}
        if dangling:
            raise CwValidationError(f"nodes {sorted(dangling)} are not reachable from the root")
        return cls(nodes[last])


def _strip_identity_relabels(root: CwNode) -> CwNode:
    built: dict[int, CwNode] = {}
    for node in postorder(root):
        if isinstance(node, Introduce):
            out = node
        elif isinstance(node, Union):
            left, right = built[id(node.left)], built[id(node.right)]
            out = node if (left is node.left and right is node.right) else Union(left, right)
        else:
            child = built[id(node.child)]
            if isinstance(node, Relabel) and node.src == node.dst:
                out = child
            elif child is node.child:
                out = node
            elif isinstance(node, Relabel):
                out = Relabel(node.src, node.dst, child)
            else:
                out = Join(node.a, node.b, child)
        built[id(node)] = out
    return built[id(root)]


def evaluate_node(root: CwNode) -> LabeledGraph:
    """Labeled graph produced by the subexpression rooted at ``root``."""
    state: dict[int, tuple[dict, set]] = {}
    for node in postorder(root):
        if isinstance(node, Introduce):
            state[id(node)] = ({node.vertex: node.label}, set())
        elif isinstance(node, Union):
            la, ea = state.pop(id(node.left))
            lb, eb = state.pop(id(node.right))
            if la.keys() & lb.keys():
                raise CwValidationError("union of overlapping vertex sets")
            la.update(lb)
            ea |= eb
            state[id(node)] = (la, ea)
        elif isinstance(node, Relabel):
            labels, edges = state.pop(id(node.child))
            for v, lab in labels.items():
                if lab == node.src:
                    labels[v] = node.dst
            state[id(node)] = (labels, edges)
        else:
            labels, edges = state.pop(id(node.child))
            va = [v for v, lab in labels.items() if lab == node.a]
            vb = [v for v, lab in labels.items() if lab == node.b]
            edges.update((min(u, v), max(u, v)) for u in va for v in vb)
            state[id(node)] = (labels, edges)
    labels, edges = state[id(root)]
    return LabeledGraph(labels, frozenset(edges))


def evaluate_cw_expression(e: CwExpression) -> LabeledGraph:
    return evaluate_node(e.root)


def _retire_and_merge(h: Graph, placed: list[int], unplaced: set[int], label_of: dict[int, int], expr: CwNode):
    """Send placed metagraph vertices with no pending neighbors to the finished
    label, and merge labels whose pending neighborhoods coincide."""
    groups: dict[int, list[int]] = {}
    for v in placed:
        groups.setdefault(label_of[v], []).append(v)
    by_future: dict[frozenset, int] = {}
    for lab in sorted(groups):
        if lab == FINISHED:
            continue
        future = h.neighbors(groups[lab][0]) & unplaced
        target = FINISHED if not future else by_future.setdefault(frozenset(future), lab)
        if target != lab:
            expr = Relabel(lab, target, expr)
            for v in groups[lab]:
                label_of[v] = target
    return expr


def _active_after(h: Graph, placed: list[int], unplaced: set[int]) -> int:
    futures = {frozenset(h.neighbors(v) & unplaced) for v in placed}
    futures.discard(frozenset())
    return len(futures)


def _substitute(node: ParseNode, kids: list[CwNode]) -> CwNode:
    h = node.metagraph
    r = len(kids)
    if node.kind == PARALLEL:
        expr = kids[0]
        for c in kids[1:]:
            expr = Union(expr, c)
        return expr
    if node.kind == SERIES:
        expr = kids[0]
        for c in kids[1:]:
            expr = Relabel(2, FINISHED, Join(FINISHED, 2, Union(expr, Relabel(FINISHED, 2, c))))
        return expr

    unplaced = set(range(r))
    placed: list[int] = []
    label_of: dict[int, int] = {}
    expr = None
    while unplaced:
        # greedy order: keep the number of live working labels small
        best = min(
            sorted(unplaced),
            key=lambda c: _active_after(h, placed + [c], unplaced - {c}),
        )
        in_use = {label_of[v] for v in placed}
        lab = next(x for x in range(2, r + 3) if x not in in_use)
        child = kids[best]
        if isinstance(child, Introduce):
            child = Introduce(child.vertex, lab)
        else:
            child = Relabel(FINISHED, lab, child)
        expr = child if expr is None else Union(expr, child)
        joined = sorted({label_of[v] for v in placed if h.has_edge(v, best)})
        for other in joined:
            expr = Join(lab, other, expr)
        unplaced.discard(best)
        placed.append(best)
        label_of[best] = lab
        expr = _retire_and_merge(h, placed, unplaced, label_of, expr)
    return expr


def parse_tree_to_cw_expression(t: ParseTree) -> CwExpression:
    """Clique-width expression for the graph of ``t``, every vertex ending on label 1.

    Children of each node are built first and parked on one working label
    each; metagraph edges become joins, and a working label is retired (or
    merged) as soon as its pending metagraph neighborhood is empty (or equal
    to another label's).  At most ``prime_width + 2`` labels are used.
    """
    built: dict[int, CwNode] = {}
    for node in t.nodes():
        if node.kind == LEAF:
            built[id(node)] = Introduce(node.vertex, FINISHED)
        else:
            built[id(node)] = _substitute(node, [built.pop(id(c)) for c in node.children])
    return CwExpression(built[id(t.root)])
