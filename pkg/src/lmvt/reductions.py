"""Partition reduction, the constant-rate closed form, and a greedy baseline."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .core import (UNASSIGNED, Allocation, AllocationLike, Instance,
                   SolveReport, objective)
from .errors import InstanceShapeError, InvalidWitnessError


@dataclass(frozen=True)
class PartitionInstance:
    items: Tuple[int, ...]

    def __post_init__(self):
        items = tuple(int(x) for x in self.items)
        if not items:
            raise ValueError("partition instance needs at least one item")
        if any(x < 1 for x in items):
            raise ValueError("partition items must be positive integers")
        object.__setattr__(self, "items", items)

    @property
    def U(self) -> int:
        return sum(self.items)


def _as_partition(p) -> PartitionInstance:
    return p if isinstance(p, PartitionInstance) else PartitionInstance(tuple(p))


def partition_to_lmvt(p: PartitionInstance | Iterable[int]) -> Tuple[Instance, Fraction]:
    """Two videos that both see rate ``x_j`` in slot ``j``; threshold ``U/2``.

    The split exists iff the optimum reaches ``U/2``.  Odd ``U`` keeps the
    threshold fractional, so the decision is simply no.
    """
    p = _as_partition(p)
    row = p.items
    return Instance((row, row)), Fraction(p.U, 2)


def lmvt_to_partition_witness(p: PartitionInstance | Iterable[int],
                              a: AllocationLike) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Items of slots owned by video 0, and the rest."""
    p = _as_partition(p)
    assign = a.assign if isinstance(a, Allocation) else tuple(a)
    if len(assign) != len(p.items):
        raise InstanceShapeError(
            f"allocation has {len(assign)} slots, partition has {len(p.items)} items")
    if any(owner is UNASSIGNED for owner in assign):
        raise InvalidWitnessError("every slot must be assigned to decode a partition")
    if any(owner not in (0, 1) for owner in assign):
        raise InvalidWitnessError("reduced instances have exactly two videos")
    subset = tuple(x for x, owner in zip(p.items, assign) if owner == 0)
    complement = tuple(x for x, owner in zip(p.items, assign) if owner == 1)
    return subset, complement


def constant_rate_opt(n: int, B: int, c: int) -> int:
    """Optimum when every rate equals ``c``: deal the slots round-robin."""
    if n < 1 or B < 1:
        raise ValueError("need n >= 1 and B >= 1")
    if c < 0:
        raise ValueError("rate must be nonnegative")
    return (B // n) * c


def solve_greedy(inst: Instance) -> SolveReport:
    """Baseline: each slot goes to the poorest video that can use it.

    Slots are taken in order.  Among videos with a positive rate for the slot,
    the one with the fewest bits so far wins, lowest index on ties.  A slot
    nobody can use stays unassigned.  No approximation guarantee.
    """
    start = time.perf_counter()
    bits = [0] * inst.n
    assign = []
    for j in range(inst.B):
        takers = [i for i in range(inst.n) if inst.rates[i][j] > 0]
        if not takers:
            assign.append(UNASSIGNED)
            continue
        i = min(takers, key=lambda v: (bits[v], v))
        bits[i] += inst.rates[i][j]
        assign.append(i)
    allocation = Allocation(assign)
    value = objective(inst, allocation)
    return SolveReport(
        value=value,
        allocation=allocation,
        states_visited=inst.B,
        layers=inst.B,
        elapsed_ms=(time.perf_counter() - start) * 1e3,
        algorithm="greedy",
        true_value=value,
    )
