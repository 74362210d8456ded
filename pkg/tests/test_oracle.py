import pytest

from happyset.figures import fig3
from happyset.graph import InputError, complete_graph, empty_graph
from happyset.oracle import DEFAULT_CAP, OracleCapExceeded, brute_maxehs, brute_maxhs, oracle_cap


def test_fig3():
    sol = brute_maxhs(fig3(), 5)
    assert sol.objective == 4
    assert sol.chosen == frozenset({0, 1, 2, 3, 4})
    assert sol.stats["subsets"] == 56


def test_first_best_subset_kept():
    # every 2-set of an edgeless graph ties; the first in order wins
    assert brute_maxhs(empty_graph(4), 2).chosen == frozenset({0, 1})


def test_trivial():
    assert brute_maxhs(fig3(), 0).objective == 0
    assert brute_maxhs(fig3(), 8).objective == 8
    assert brute_maxehs(fig3(), 8).objective == 12
    assert brute_maxehs(complete_graph(5), 3).objective == 3


def test_range():
    with pytest.raises(InputError):
        brute_maxhs(fig3(), 9)


def test_cap():
    with pytest.raises(OracleCapExceeded):
        brute_maxehs(fig3(), 4, cap=10)
    assert brute_maxehs(fig3(), 1, cap=10).objective == 0


def test_cap_env(monkeypatch):
    assert oracle_cap() == DEFAULT_CAP
    monkeypatch.setenv("HAPPYSET_ORACLE_CAP", "3")
    assert oracle_cap() == 3
    with pytest.raises(OracleCapExceeded):
        brute_maxhs(fig3(), 2)
