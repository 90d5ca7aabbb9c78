"""Exhaustive reference solvers for tiny instances.

Nothing here is clever on purpose: these functions are the ground truth the
dynamic programs are checked against.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Set

from .core import (UNASSIGNED, Allocation, Instance, SolveReport, Vector,
                   bits_received, rank_key)
from .errors import TooLargeForOracleError


@dataclass(frozen=True)
class OracleLimits:
    max_assignments: int = 10**7
    max_partition_sum: int = 10**6

    def __post_init__(self):
        if self.max_assignments <= 0 or self.max_partition_sum <= 0:
            raise ValueError("oracle limits must be positive")


DEFAULT_LIMITS = OracleLimits()


def all_allocations(inst: Instance, lim: OracleLimits = DEFAULT_LIMITS) -> Iterator[Allocation]:
    """Every allocation, slot-major with choices ordered ``0..n-1, UNASSIGNED``."""
    size = (inst.n + 1) ** inst.B
    if size > lim.max_assignments:
        raise TooLargeForOracleError(
            f"(n+1)^B = {size} assignments exceeds cap {lim.max_assignments}")
    choices = tuple(range(inst.n)) + (UNASSIGNED,)
    for assign in itertools.product(choices, repeat=inst.B):
        yield Allocation(assign)


def achievable_vectors(inst: Instance, lim: OracleLimits = DEFAULT_LIMITS) -> Set[Vector]:
    """Set of bit vectors produced by some allocation (not downward closed)."""
    return {bits_received(inst, a) for a in all_allocations(inst, lim)}


def brute_force_opt(inst: Instance, lim: OracleLimits = DEFAULT_LIMITS) -> SolveReport:
    """Optimal allocation by trying all ``(n+1)^B`` of them.

    The winner is the first allocation in enumeration order with the largest
    ``rank_key`` of its bit vector.
    """
    start = time.perf_counter()
    best = None
    best_key = None
    count = 0
    for a in all_allocations(inst, lim):
        count += 1
        key = rank_key(bits_received(inst, a))
        if best_key is None or key > best_key:
            best, best_key = a, key
    return SolveReport(
        value=best_key[0],
        allocation=best,
        states_visited=count,
        layers=inst.B,
        elapsed_ms=(time.perf_counter() - start) * 1e3,
        algorithm="brute",
        true_value=best_key[0],
    )


def partition_decide(S: Iterable[int], lim: OracleLimits = DEFAULT_LIMITS) -> bool:
    """Can the multiset ``S`` be split into two parts of equal sum?"""
    items = list(S)
    if any(x < 1 for x in items):
        raise ValueError("partition items must be positive integers")
    U = sum(items)
    if U > lim.max_partition_sum:
        raise TooLargeForOracleError(
            f"sum {U} exceeds partition cap {lim.max_partition_sum}")
    if U % 2:
        return False
    half = U // 2
    reach = [False] * (half + 1)
    reach[0] = True
    for x in items:
        for s in range(half, x - 1, -1):
            if reach[s - x]:
                reach[s] = True
    return reach[half]
