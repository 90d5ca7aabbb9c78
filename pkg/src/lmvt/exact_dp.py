"""Layered reachability DP over transmission vectors.

``F(m, T)`` holds when the first ``m`` slots can be split so that video ``i``
gets at least ``T[i]`` bits.  ``F(m, .)`` is downward closed under the
componentwise order, so each layer is stored as its Pareto frontier: the
maximal achievable vectors.  ``T`` is achievable at layer ``m`` exactly when
some frontier vector dominates it.

The textbook recurrence runs backward: ``F(m, T)`` holds if ``F(m-1, T)``
does, or if ``F(m-1, W)`` does where ``W`` equals ``T`` except
``W[i] = max(0, T[i] - r[i][m])``.  Here the same relation is built forward.
Every maximal vector of layer ``m`` is either a maximal vector of layer
``m - 1`` (slot wasted) or one with ``r[i][m]`` added to coordinate ``i``,
so pushing the previous frontier through all ``n + 1`` choices and
filtering dominated results gives the next frontier.  Only achievable states
are ever generated.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .core import (UNASSIGNED, Allocation, Instance, SolveReport, Vector,
                   b_max, rank_key)
from .errors import InstanceShapeError, StateBudgetError

DEFAULT_STATE_BUDGET = 5 * 10**6

#: ``(previous vector, slot decision)`` where the decision is a video or ``UNASSIGNED``.
Predecessor = Tuple[Vector, Optional[int]]

#: ``update(video, value)`` maps a raw coordinate onto the state space.
Update = Callable[[int, int], int]


@dataclass(frozen=True)
class LayerSet:
    """Frontier of achievable vectors after the first ``layer_index`` slots.

    ``frontier`` is sorted in decreasing lexicographic order.  ``candidates``
    counts the distinct vectors generated while building the layer, before
    dominance filtering.
    """

    layer_index: int
    frontier: Tuple[Vector, ...]
    predecessors: Dict[Vector, Predecessor] = field(default_factory=dict, compare=False)
    candidates: int = 1

    @classmethod
    def initial(cls, n: int) -> "LayerSet":
        return cls(0, ((0,) * n,), {}, 1)

    def admits(self, T: Sequence[int]) -> bool:
        """True iff ``T`` is dominated by a frontier vector, i.e. ``F(m, T)``."""
        return any(dominates(T, V) for V in self.frontier)


def dominates(T1: Sequence[int], T2: Sequence[int]) -> bool:
    """``T1 <= T2`` componentwise (``T2`` dominates ``T1``)."""
    if len(T1) != len(T2):
        raise InstanceShapeError(f"vector lengths differ: {len(T1)} vs {len(T2)}")
    return all(a <= b for a, b in zip(T1, T2))


def pareto_frontier(vectors: Iterable[Vector]) -> List[Vector]:
    """Maximal elements of ``vectors``, in decreasing lexicographic order."""
    ordered = sorted(set(vectors), reverse=True)
    if not ordered:
        return []
    n = len(ordered[0])
    if n == 1:
        return ordered[:1]
    if n == 2:
        # after sorting, a vector survives iff its second coordinate beats
        # every vector before it
        kept = []
        best = -1
        for v in ordered:
            if v[1] > best:
                kept.append(v)
                best = v[1]
        return kept
    kept = []
    for v in ordered:
        # only lexicographically larger vectors can dominate v
        if not any(all(k >= x for k, x in zip(kv, v)) for kv in kept):
            kept.append(v)
    return kept


def advance_layer(inst: Instance, prev: LayerSet,
                  update: Optional[Update] = None,
                  caps: Optional[Sequence[int]] = None) -> LayerSet:
    """Build layer ``m = prev.layer_index + 1`` from layer ``m - 1``.

    Slot ``m`` is offered to videos ``0..n-1`` and then wasted, and the first
    generator of each vector is recorded as its predecessor.  ``update``
    post-processes the changed coordinate; the rounded DP passes its grid
    snap here.
    """
    m = prev.layer_index + 1
    if m > inst.B:
        raise ValueError(f"instance has only {inst.B} slots")
    slot = m - 1
    if caps is None:
        caps = b_max(inst)
    column = [inst.rates[i][slot] for i in range(inst.n)]
    seen: Dict[Vector, Predecessor] = {}
    for V in prev.frontier:
        for i in range(inst.n):
            value = min(V[i] + column[i], caps[i])
            if update is not None:
                value = update(i, value)
            W = V[:i] + (value,) + V[i + 1:]
            if W not in seen:
                seen[W] = (V, i)
        if V not in seen:
            seen[V] = (V, UNASSIGNED)
    frontier = tuple(pareto_frontier(seen))
    preds = {V: seen[V] for V in frontier}
    return LayerSet(m, frontier, preds, len(seen))


def run_layers(inst: Instance, update: Optional[Update] = None,
               state_budget: int = DEFAULT_STATE_BUDGET,
               hint: str = "") -> List[LayerSet]:
    """All layers ``0..B``; raises once total frontier size passes the budget."""
    caps = b_max(inst)
    layers = [LayerSet.initial(inst.n)]
    total = 1
    for _ in range(inst.B):
        layer = advance_layer(inst, layers[-1], update, caps)
        total += len(layer.frontier)
        if total > state_budget:
            raise StateBudgetError(
                f"{total} frontier vectors by layer {layer.layer_index} "
                f"exceeds the state budget of {state_budget}{hint}")
        layers.append(layer)
    return layers


def best_vector(layer: LayerSet) -> Vector:
    """Frontier vector with the largest ``rank_key``."""
    return max(layer.frontier, key=rank_key)


def reconstruct(layers: Sequence[LayerSet], target: Vector) -> Allocation:
    """Walk predecessor links from ``target`` in the last layer back to layer 0."""
    assign = [UNASSIGNED] * (len(layers) - 1)
    V = target
    for layer in reversed(layers[1:]):
        parent, decision = layer.predecessors[V]
        assign[layer.layer_index - 1] = decision
        V = parent
    return Allocation(assign)


def extract(inst: Instance, layers: Sequence[LayerSet], algorithm: str,
            start: float) -> SolveReport:
    target = best_vector(layers[-1])
    allocation = reconstruct(layers, target)
    return SolveReport(
        value=min(target),
        allocation=allocation,
        states_visited=sum(layer.candidates for layer in layers),
        layers=inst.B,
        elapsed_ms=(time.perf_counter() - start) * 1e3,
        algorithm=algorithm,
        layer_sizes=tuple(len(layer.frontier) for layer in layers),
    )


def solve_exact(inst: Instance, state_budget: int = DEFAULT_STATE_BUDGET) -> SolveReport:
    """Optimal max-min allocation.

    >>> solve_exact(Instance([[3, 1], [2, 2]])).value
    2
    """
    start = time.perf_counter()
    layers = run_layers(inst, state_budget=state_budget,
                        hint="; try the fptas solver with a coarser epsilon")
    report = extract(inst, layers, "exact", start)
    report.true_value = report.value
    return report
