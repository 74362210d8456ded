import itertools
import random

import pytest
from hypothesis import strategies as st

from happyset.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def make_corpus(count: int = 200, seed: int = 2024, n_min: int = 4, n_max: int = 10):
    """Seeded graphs with sizes in [n_min, n_max] and densities spread over 0.1..0.9."""
    out = []
    for i in range(count):
        rng = random.Random(seed * 7919 + i)
        n = rng.randint(n_min, n_max)
        p = 0.1 + 0.8 * i / max(count - 1, 1)
        out.append(random_graph(n, p, rng.randrange(1 << 30)))
    return out


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.fixture(scope="session")
def small_corpus():
    return make_corpus(count=40, seed=7, n_max=9)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
