import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from happyset.figures import fig3
from happyset.graph import (
    Graph,
    HappySetSolution,
    InputError,
    complete_graph,
    count_happy_edges,
    count_happy_vertices,
    count_happy_vertices_direct,
    format_graph,
    induced_subgraph,
    parse_graph,
)

from .conftest import graphs

A, B, C, D, E, F, G, H = range(8)


def test_graph_invariants():
    g = fig3()
    assert (g.n, g.m) == (8, 12)
    for v in g.vertices():
        for u in g.adjacency[v]:
            assert v in g.adjacency[u]
    assert sum(len(a) for a in g.adjacency) == 2 * g.m


def test_rejects_self_loop_and_range():
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])


def test_parallel_edges_collapse():
    assert Graph(2, [(0, 1), (1, 0)]).m == 1


def test_fig3_happy_vertices():
    g = fig3()
    assert count_happy_vertices(g, {C, D, E, F, G}) == 1
    assert count_happy_vertices(g, {A, B, C, D, E}) == 4


def test_fig3_happy_edges():
    # ab ac ad bc bd cd ce de lie inside {a..e}
    assert count_happy_edges(fig3(), {A, B, C, D, E}) == 8


def test_trivial_counts():
    g = fig3()
    assert count_happy_vertices(g, range(8)) == 8
    assert count_happy_vertices(g, ()) == 0
    assert count_happy_edges(g, range(8)) == 12
    assert count_happy_edges(g, {A}) == 0
    assert count_happy_edges(g, ()) == 0


def test_out_of_range_vertex():
    with pytest.raises(InputError):
        count_happy_vertices(fig3(), {8})
    with pytest.raises(InputError):
        count_happy_edges(fig3(), {-1})


def test_induced_subgraph():
    tri = complete_graph(3)
    sub, relabel = induced_subgraph(tri, {0, 1})
    assert sub == Graph(2, [(0, 1)])
    assert relabel == {0: 0, 1: 1}
    k4, _ = induced_subgraph(fig3(), {A, B, C, D})
    assert k4 == complete_graph(4)
    empty, relabel = induced_subgraph(fig3(), ())
    assert empty.n == 0 and relabel == {}


def test_induced_subgraph_relabels_by_id():
    sub, relabel = induced_subgraph(fig3(), {E, F, H})
    assert relabel == {E: 0, F: 1, H: 2}
    assert sub.sorted_edges() == [(0, 1), (1, 2)]


@settings(max_examples=150, deadline=None)
@given(data=st.data(), g=graphs(max_n=9))
def test_happy_vertex_characterization_matches_definition(data, g):
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert count_happy_vertices(g, s) == count_happy_vertices_direct(g, s)


@settings(max_examples=150, deadline=None)
@given(data=st.data(), g=graphs(max_n=9))
def test_monotone_in_selection(data, g):
    big = data.draw(st.sets(st.integers(0, g.n - 1)))
    small = data.draw(st.sets(st.sampled_from(sorted(big)))) if big else set()
    assert count_happy_vertices(g, small) <= count_happy_vertices(g, big)
    assert count_happy_edges(g, small) <= count_happy_edges(g, big)


@settings(max_examples=100, deadline=None)
@given(data=st.data(), g=graphs(max_n=9))
def test_happy_edges_equal_induced_edge_count(data, g):
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert count_happy_edges(g, s) == induced_subgraph(g, s)[0].m


def test_graph_text_round_trip():
    g = fig3()
    text = format_graph(g, "figure 3")
    assert text.startswith("# figure 3\n8 12\n")
    assert parse_graph(text) == g


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n",
        "3 1\n",
        "3 1\n2 1\n",
        "3 2\n0 1\n0 1\n",
        "3 1\n0 x\n",
        "3 1\n0 3\n",
    ],
)
def test_graph_text_errors(text):
    with pytest.raises(InputError):
        parse_graph(text)


def test_graph_text_comments():
    assert parse_graph("# hi\n2 1\n# mid\n0 1\n") == Graph(2, [(0, 1)])


def test_solution_validate():
    g = fig3()
    HappySetSolution("maxhs", frozenset({A, B, C, D, E}), 5, 4).validate(g)
    with pytest.raises(AssertionError):
        HappySetSolution("maxhs", frozenset({A, B, C, D, E}), 5, 3).validate(g)
    with pytest.raises(AssertionError):
        HappySetSolution("maxehs", frozenset({A, B}), 3, 1).validate(g)
