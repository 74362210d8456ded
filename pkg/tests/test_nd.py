import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from happyset.decomposition.twins import compute_twin_partition
from happyset.figures import FIG6_MODULES, fig6
from happyset.graph import Graph, Infeasible, InputError, complete_graph, count_happy_edges, empty_graph
from happyset.knapsack import INFEASIBLE
from happyset.nd import IqpInstance, build_iqp, solve_iqp_bounded, solve_maxehs_nd
from happyset.oracle import brute_maxehs

from .conftest import graphs


def test_fig6_instance():
    inst = build_iqp(fig6(), 10)
    assert inst.q == (1, 1, 0, 0, 1)
    assert inst.upper == (4, 3, 4, 2, 3)
    assert inst.a == (
        (0, 1, 1, 0, 0),
        (1, 0, 0, 1, 0),
        (1, 0, 0, 1, 1),
        (0, 1, 1, 0, 0),
        (0, 0, 1, 0, 0),
    )
    assert inst.quadratic_matrix()[0] == [1, 1, 1, 0, 0]


def test_fig6_optimum():
    sol = solve_maxehs_nd(fig6(), 10)
    assert sol.objective == 34
    assert count_happy_edges(fig6(), sol.chosen) == 34


def test_fig6_matches_oracle():
    g = fig6()
    for k in (0, 3, 7, 10, 13, 16):
        assert solve_maxehs_nd(g, k).objective == brute_maxehs(g, k).objective


def test_edgeless_and_complete():
    assert build_iqp(empty_graph(4), 2).q == (0,)
    assert build_iqp(complete_graph(4), 2).q == (1,)
    assert solve_maxehs_nd(empty_graph(4), 3).objective == 0
    assert solve_maxehs_nd(complete_graph(5), 3).objective == 3


def test_k_zero_and_full():
    g = fig6()
    inst = build_iqp(g, 0)
    sol = solve_iqp_bounded(inst)
    assert sol.x == (0,) * 5 and sol.happy_edges == 0
    full = solve_iqp_bounded(build_iqp(g, g.n))
    assert full.x == inst.upper
    assert full.happy_edges == g.m


def test_box_too_small():
    inst = IqpInstance(q=(1,), a=((0,),), upper=(2,), k=3)
    assert solve_iqp_bounded(inst) is INFEASIBLE
    with pytest.raises(Infeasible):
        solve_maxehs_nd(complete_graph(3), 4)
    with pytest.raises(InputError):
        solve_maxehs_nd(complete_graph(3), -1)


def test_ties_prefer_lexicographically_smallest():
    # two disjoint edges form two clique classes; (0, 2) and (2, 0) tie
    inst = build_iqp(Graph(4, [(0, 1), (2, 3)]), 2)
    sol = solve_iqp_bounded(inst)
    assert sol.happy_edges == 1
    assert sol.x == (0, 2)


@settings(max_examples=150, deadline=None)
@given(data=st.data(), g=graphs(max_n=9))
def test_objective_is_twice_happy_edges(data, g):
    inst = build_iqp(g, 0)
    x = [data.draw(st.integers(0, u)) for u in inst.upper]
    assert inst.objective(x) == 2 * inst.happy_edges(x)
    tp = compute_twin_partition(g)
    chosen = {v for mod, xi in zip(tp.modules, x) for v in mod[:xi]}
    assert inst.happy_edges(x) == count_happy_edges(g, chosen)


@settings(max_examples=100, deadline=None)
@given(data=st.data(), g=graphs(min_n=2, max_n=9))
def test_module_exchange_invariance(data, g):
    tp = compute_twin_partition(g)
    rng = random.Random(data.draw(st.integers(0, 1000)))
    x = [data.draw(st.integers(0, len(m))) for m in tp.modules]
    first = {v for mod, xi in zip(tp.modules, x) for v in mod[:xi]}
    other = {v for mod, xi in zip(tp.modules, x) for v in rng.sample(mod, xi)}
    assert count_happy_edges(g, first) == count_happy_edges(g, other)


def test_fig6_modules_fixture_is_partition():
    assert sorted(v for m in FIG6_MODULES for v in m) == list(range(16))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_matches_oracle_for_all_k(g):
    for k in range(g.n + 1):
        sol = solve_maxehs_nd(g, k)
        assert sol.objective == brute_maxehs(g, k).objective
        assert len(sol.chosen) == k
