"""Worked instances from the literature on happy sets, as named fixtures.

Vertex letters map to ids in alphabetical order (a=0, b=1, ...).
"""

from __future__ import annotations

from .graph import Graph


def _lettered(pairs: str, n: int) -> Graph:
    return Graph(n, [(ord(p[0]) - 97, ord(p[1]) - 97) for p in pairs.split()])


def fig3() -> Graph:
    """8 vertices a..h; optimum for k=5 is {a,b,c,d,e} with 4 happy vertices."""
    return _lettered("ab ac ad bc bd cd ce de ef eg fh gh", 8)


def fig4() -> Graph:
    """7 vertices a..g whose modular decomposition has a 4-vertex prime root."""
    return _lettered("ab ac ad be cd ce de ef eg", 7)


# twin modules of fig6, in vertex-id order
FIG6_MODULES = (
    (0, 1, 2, 3),  # clique
    (4, 5, 6),  # clique
    (7, 8, 9, 10),  # independent
    (11, 12),  # independent
    (13, 14, 15),  # clique
)
FIG6_QUOTIENT_EDGES = ((0, 1), (0, 2), (2, 3), (1, 3), (2, 4))


def fig6() -> Graph:
    """16 vertices in five twin modules; the best 10-set has 34 edges."""
    edges = []
    for i in (0, 1, 4):
        mod = FIG6_MODULES[i]
        edges.extend((u, v) for j, u in enumerate(mod) for v in mod[j + 1:])
    for a, b in FIG6_QUOTIENT_EDGES:
        edges.extend((u, v) for u in FIG6_MODULES[a] for v in FIG6_MODULES[b])
    return Graph(16, edges)


# fig7: x1..x6 -> 0..5 form the deletion set, v1..v4 -> 6..9 and u1,u2 -> 10,11
FIG7_X = (0, 1, 2, 3, 4, 5)
FIG7_S_PRIME = (0, 1, 2)
FIG7_C1 = (6, 7, 8, 9)
FIG7_C2 = (10, 11)


def fig7() -> Graph:
    x1, x2, x3, x4, x5, x6 = FIG7_X
    v1, v2, v3, v4 = FIG7_C1
    u1, u2 = FIG7_C2
    edges = [
        (x1, v1), (x2, v1), (x3, v1),
        (x2, v2), (x3, v2), (x4, v2),
        (x3, v3),
        (x1, x2), (x3, x4), (x5, x6),
        (x4, v4), (x5, v4),
        (v1, v2), (v2, v3), (v3, v4), (v1, v3), (v2, v4), (v1, v4),
        (u1, u2),
        (x2, u1), (x3, u1), (x6, u2),
    ]
    return Graph(12, edges)


FIGURES = {"fig3": fig3, "fig4": fig4, "fig6": fig6, "fig7": fig7}
