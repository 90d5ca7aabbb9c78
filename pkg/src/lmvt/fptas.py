"""Rounded DP on a geometric value grid.

Each video's coordinate is restricted to ``{0}`` plus the floors of the
powers ``(1 + eps)^e`` that do not exceed its ``b_max``, with ``b_max``
itself added as the top point.  After each slot the changed coordinate is
snapped down onto this grid, so every layer holds at most ``prod |grid[i]|``
vectors.

All powers are exact rationals; floating-point logarithms misplace the
boundary at exact powers such as ``psi(8, 1) == 8``.

Guarantee: when ``eps`` is ``1/q`` or a positive integer, snapping any
``1 <= z <= b_max`` loses at most a factor ``1 + eps``.  Compounded over the
at most ``B`` updates a coordinate receives, the grid value ``v`` satisfies
``v <= opt <= v * (1 + eps)**B``.  The state count is polynomial in ``B`` and
``1/eps`` only for a fixed number of videos.
"""

from __future__ import annotations

import bisect
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .core import (Instance, Rational, SolveReport, as_fraction, b_max,
                   objective)
from .errors import InstanceShapeError
from .exact_dp import DEFAULT_STATE_BUDGET, extract, run_layers


def as_epsilon(eps: Rational) -> Fraction:
    """Validate a rounding parameter: an exact rational strictly above zero."""
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    return eps


def psi(t: int, eps: Rational) -> int:
    """``floor((1+eps)^e)`` for the largest ``e`` with ``(1+eps)^e <= t``; 0 if ``t <= 0``.

    >>> psi(5, 1), psi(8, 1), psi(10, Fraction(1, 2))
    (4, 8, 7)
    """
    if t <= 0:
        return 0
    base = 1 + as_epsilon(eps)
    power = Fraction(1)
    while power * base <= t:
        power *= base
    return math.floor(power)


def grid_row(top: int, eps: Rational) -> Tuple[int, ...]:
    """Grid for one video whose row sum is ``top``."""
    base = 1 + as_epsilon(eps)
    if top <= 0:
        return (0,)
    points = {0, top}
    power = Fraction(1)
    while power <= top:
        points.add(math.floor(power))
        power *= base
    return tuple(sorted(points))


@dataclass(frozen=True)
class ValueGrid:
    """Per-video ascending grids; ``rows[i][0] == 0`` and ``rows[i][-1] == b_max[i]``."""

    rows: Tuple[Tuple[int, ...], ...]
    eps: Fraction

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def state_bound(self) -> int:
        """Largest possible number of vectors in one layer."""
        return math.prod(self.sizes)

    def snap(self, video: int, value: int) -> int:
        return snap_down(value, self.rows[video])

    def __contains__(self, vector) -> bool:
        if len(vector) != len(self.rows):
            return False
        return all(v in set(row) for v, row in zip(vector, self.rows))


def build_grid(inst: Instance, eps: Rational) -> ValueGrid:
    eps = as_epsilon(eps)
    return ValueGrid(tuple(grid_row(top, eps) for top in b_max(inst)), eps)


def snap_down(v: int, grid_i: Sequence[int]) -> int:
    """Largest entry of ``grid_i`` not above ``max(0, v)``."""
    if not grid_i or grid_i[0] != 0:
        raise InstanceShapeError("grid row must start at 0")
    return grid_i[bisect.bisect_right(grid_i, max(0, v)) - 1]


def size_bound(top: int, eps: Rational) -> int:
    """Upper bound on ``len(grid_row(top, eps))`` by counting powers exactly."""
    if top <= 0:
        return 1
    base = 1 + as_epsilon(eps)
    count, power = 0, Fraction(1)
    while power <= top:
        count += 1
        power *= base
    return count + 2


def solve_fptas(inst: Instance, eps: Rational,
                state_budget: int = DEFAULT_STATE_BUDGET) -> SolveReport:
    """Approximate max-min allocation on the rounded grid.

    ``value`` is the grid value of the chosen vector; ``true_value`` is the
    objective of the reconstructed allocation and is never smaller.
    """
    start = time.perf_counter()
    grid = build_grid(inst, eps)
    layers = run_layers(inst, update=grid.snap, state_budget=state_budget,
                        hint="; try a coarser epsilon")
    report = extract(inst, layers, "fptas", start)
    report.true_value = objective(inst, report.allocation)
    report.epsilon = grid.eps
    return report


def epsilon_for_ratio(delta: Rational, B: int) -> Fraction:
    """Largest ``1/q`` with ``(1 + 1/q)^B <= 1/(1 - delta)``.

    The solver then guarantees a value of at least ``(1 - delta) * opt``.
    """
    delta = as_fraction(delta)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    if B < 1:
        raise ValueError("B must be positive")
    limit = 1 / (1 - delta)

    def ok(q: int) -> bool:
        return (1 + Fraction(1, q)) ** B <= limit

    # float estimate, then settle exactly
    target = (1 / (1 - float(delta))) ** (1 / B) - 1
    q = max(1, math.ceil(1 / target)) if target > 0 else 1
    while q > 1 and ok(q - 1):
        q -= 1
    while not ok(q):
        q += 1
    return Fraction(1, q)


def guaranteed_bound_holds(value: int, opt: int, eps: Fraction, B: int) -> bool:
    """``value <= opt <= value * (1 + eps)^B`` in exact arithmetic."""
    return value <= opt and value * (1 + eps) ** B >= opt


def linear_bound_holds(value: int, opt: int, eps: Fraction, B: int) -> bool:
    """``value * (1 + eps * B) >= opt``.

    Tighter than the guaranteed bound and not always true; only reported.
    """
    return value * (1 + eps * B) >= opt
