"""Exact-weight knapsack with unit-weight items and per-item value tables.

Item ``i`` contributes ``f_i(x_i)`` for a count ``x_i`` drawn from its domain
``D_i``; the counts must sum to exactly the capacity.  One bottom-up pass
answers every capacity ``0..W`` at once.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence


class _Infeasible(enum.Enum):
    INFEASIBLE = "INFEASIBLE"

    def __repr__(self) -> str:
        return "INFEASIBLE"


#: Marks an unreachable table entry.  Deliberately not a number.
INFEASIBLE = _Infeasible.INFEASIBLE


@dataclass(frozen=True)
class FKnapsackInstance:
    items: tuple[Mapping[int, int], ...]
    capacity: int

    def __init__(self, items: Sequence[Mapping[int, int]], capacity: int):
        if capacity < 0:
            raise ValueError(f"capacity must be non-negative, got {capacity}")
        frozen = []
        for i, table in enumerate(items):
            table = {int(x): int(v) for x, v in dict(table).items()}
            for x, v in table.items():
                if x < 0:
                    raise ValueError(f"item {i}: negative domain value {x}")
                if v < 0:
                    raise ValueError(f"item {i}: negative value f({x}) = {v}")
            frozen.append(table)
        object.__setattr__(self, "items", tuple(frozen))
        object.__setattr__(self, "capacity", capacity)

    def evaluate(self, xs: Sequence[int]) -> int:
        return sum(f[x] for f, x in zip(self.items, xs))


@dataclass
class FKnapsackResult:
    instance: FKnapsackInstance
    opt: list  # opt[w]: int or INFEASIBLE
    choice: list  # choice[t][w]: count chosen for item t at running weight w
    work: int = 0

    def value(self, w: int):
        return self.opt[w]

    def feasible(self, w: int) -> bool:
        return 0 <= w <= self.instance.capacity and self.opt[w] is not INFEASIBLE


def solve_all_capacities(inst: FKnapsackInstance) -> FKnapsackResult:
    """Optimal value for every exact total weight ``0..W``.

    ``phi[t][w]`` is the best value of the first ``t`` items summing to ``w``.
    Among equally good counts for item ``t`` the smallest is kept.
    """
    cap = inst.capacity
    row = [INFEASIBLE] * (cap + 1)
    row[0] = 0
    choice = []
    work = 0
    for table in inst.items:
        domain = sorted(x for x in table if x <= cap)
        new = [INFEASIBLE] * (cap + 1)
        pick = [None] * (cap + 1)
        for w in range(cap + 1):
            best = INFEASIBLE
            arg = None
            for x in domain:
                if x > w:
                    break
                work += 1
                prev = row[w - x]
                if prev is INFEASIBLE:
                    continue
                cand = prev + table[x]
                if best is INFEASIBLE or cand > best:
                    best, arg = cand, x
            new[w] = best
            pick[w] = arg
        row = new
        choice.append(pick)
    return FKnapsackResult(inst, row, choice, work)


def reconstruct(res: FKnapsackResult, w: int):
    """One optimal count vector for total weight ``w``, or ``INFEASIBLE``."""
    if not 0 <= w <= res.instance.capacity:
        raise ValueError(f"weight {w} outside 0..{res.instance.capacity}")
    if res.opt[w] is INFEASIBLE:
        return INFEASIBLE
    xs = [0] * len(res.choice)
    for t in range(len(res.choice) - 1, -1, -1):
        x = res.choice[t][w]
        xs[t] = x
        w -= x
    assert w == 0
    return tuple(xs)
