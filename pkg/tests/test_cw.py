import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings

from happyset.cw import cw_tables, dp_introduce, dp_join, dp_relabel, graph_of, solve_maxhs_cw
from happyset.decomposition.cwexpr import (
    CwExpression,
    Introduce,
    Join,
    Relabel,
    Union,
    evaluate_node,
    parse_tree_to_cw_expression,
)
from happyset.decomposition.modular import modular_decompose
from happyset.figures import fig3
from happyset.graph import InputError, count_happy_vertices
from happyset.knapsack import INFEASIBLE
from happyset.oracle import brute_maxhs

from .conftest import graphs


def semantic_table(labels: dict, edges, width: int, k: int) -> dict:
    """Brute-force ``(w, X) -> vector over T`` for a labeled graph."""
    adj = {v: set() for v in labels}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    verts = sorted(labels)
    out: dict = {}
    for w in range(min(k, len(verts)) + 1):
        for s in itertools.combinations(verts, w):
            s = set(s)
            x = 0
            for lab in range(1, width + 1):
                if all(v in s for v in verts if labels[v] == lab):
                    x |= 1 << (lab - 1)
            happy_bits = [1 << (labels[v] - 1) for v in s if adj[v] <= s]
            vec = np.array([sum(1 for b in happy_bits if b & t) for t in range(1 << width)])
            key = (w, x)
            out[key] = vec if key not in out else np.maximum(out[key], vec)
    return out


def assert_tables_equal(got: dict, want: dict):
    assert set(got) == set(want)
    for key in want:
        assert list(got[key]) == list(want[key]), key


def lettered(pairs: str):
    return [(ord(p[0]) - 97, ord(p[1]) - 97) for p in pairs.split()]


# labels i=1 on a,b,c and j=2 on d,e,f
SIX_LABELS = {0: 1, 1: 1, 2: 1, 3: 2, 4: 2, 5: 2}
I, J = 0b01, 0b10


def test_relabel_figure_values():
    edges = lettered("ab bc ad be bf cf de")
    child = semantic_table(SIX_LABELS, edges, 2, 4)
    assert child[(4, 0)][I | J] == 3
    assert child[(4, I)][I | J] == 2
    assert child[(4, J)][I | J] == 1
    parent = dp_relabel(child, 1, 2, 2)
    assert parent[(4, I)][J] == 3
    assert_tables_equal(parent, semantic_table({v: 2 for v in SIX_LABELS}, edges, 2, 4))


def test_join_figure_values():
    edges = lettered("ab bc ad bd cf ef")
    child = semantic_table(SIX_LABELS, edges, 2, 5)
    assert child[(5, I)][I | J] == 4
    assert child[(5, I)][J] == 2
    parent = dp_join(child, 1, 2, 2)
    assert parent[(5, I)][I | J] == 2
    joined = edges + [(a, b) for a in range(3) for b in range(3, 6)]
    assert_tables_equal(parent, semantic_table(SIX_LABELS, joined, 2, 5))


def test_introduce_table():
    table = dp_introduce(2, 3, 1)
    assert set(table) == {(0, 0b101), (1, 0b111)}
    assert list(table[(1, 0b111)]) == [0, 0, 1, 1, 0, 0, 1, 1]
    assert not table[(0, 0b101)].any()
    assert set(dp_introduce(1, 2, 0)) == {(0, 0b10)}


def random_expression(rng: random.Random, n: int, width: int):
    """Random expression over vertices 0..n-1 using labels 1..width."""
    parts = [Introduce(v, rng.randint(1, width)) for v in range(n)]
    while len(parts) > 1 or rng.random() < 0.5:
        op = rng.random()
        if len(parts) > 1 and op < 0.4:
            a = parts.pop(rng.randrange(len(parts)))
            b = parts.pop(rng.randrange(len(parts)))
            parts.append(Union(a, b))
            continue
        idx = rng.randrange(len(parts))
        i, j = rng.sample(range(1, width + 1), 2)
        parts[idx] = Join(i, j, parts[idx]) if op < 0.75 else Relabel(i, j, parts[idx])
        if len(parts) == 1 and rng.random() < 0.3:
            break
    return CwExpression(parts[0], width=width)


def check_every_node(e: CwExpression, k: int):
    tabs = cw_tables(e, k)
    for node in e.nodes():
        lg = evaluate_node(node)
        want = semantic_table(lg.labels, lg.edges, e.width, k)
        assert_tables_equal(tabs.tables[id(node)], want)


def test_random_expressions_every_node():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 6)
        e = random_expression(rng, n, rng.randint(2, 3))
        check_every_node(e, rng.randint(0, n))


def test_converted_expressions_every_node():
    e = parse_tree_to_cw_expression(modular_decompose(fig3()))
    check_every_node(e, 5)


def test_fig3_optimum():
    e = parse_tree_to_cw_expression(modular_decompose(fig3()))
    sol = solve_maxhs_cw(e, 5)
    assert sol.objective == 4
    assert count_happy_vertices(fig3(), sol.chosen) == 4


def test_entry_exposes_infeasible():
    e = CwExpression(Introduce(0, 1))
    tabs = cw_tables(e, 1)
    assert tabs.entry(e.root, 1, 0b1, 0b1) == 1
    assert tabs.entry(e.root, 1, 0b0, 0b1) is INFEASIBLE


def test_k_out_of_range():
    e = CwExpression(Introduce(0, 1))
    with pytest.raises(InputError):
        solve_maxhs_cw(e, 2)


def permute_labels(node, perm):
    if isinstance(node, Introduce):
        return Introduce(node.vertex, perm[node.label])
    if isinstance(node, Union):
        return Union(permute_labels(node.left, perm), permute_labels(node.right, perm))
    if isinstance(node, Relabel):
        return Relabel(perm[node.src], perm[node.dst], permute_labels(node.child, perm))
    return Join(perm[node.a], perm[node.b], permute_labels(node.child, perm))


def test_label_permutation_invariance():
    rng = random.Random(9)
    for _ in range(15):
        e = parse_tree_to_cw_expression(modular_decompose(
            graph_of(random_expression(rng, rng.randint(3, 8), 3))))
        labels = list(range(1, e.width + 1))
        shuffled = labels[:]
        rng.shuffle(shuffled)
        p = CwExpression(permute_labels(e.root, dict(zip(labels, shuffled))), width=e.width)
        for k in range(e.n + 1):
            assert solve_maxhs_cw(e, k).objective == solve_maxhs_cw(p, k).objective


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_matches_oracle_for_all_k(g):
    e = parse_tree_to_cw_expression(modular_decompose(g))
    for k in range(g.n + 1):
        sol = solve_maxhs_cw(e, k)
        assert sol.objective == brute_maxhs(g, k).objective
        assert len(sol.chosen) == k
