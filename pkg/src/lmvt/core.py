"""Problem model for lead-based multiple video transmission.

An epoch has ``B`` slots and ``n`` videos.  Giving slot ``j`` to video ``i``
delivers ``rates[i][j]`` bits to it, and each slot goes to at most one video.
The solvers in this package maximize the minimum number of bits any video
receives; a :class:`LeadFunction` turns that number into a playable lead for
threshold questions.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .errors import CapacityError, InstanceShapeError, InvalidAllocationError

#: Marker for a slot that is given to nobody.
UNASSIGNED = None

RATE_CAP = 2**32 - 1
MAGNITUDE_CAP = 2**63 - 1

Rational = Union[int, Fraction, str]
Vector = Tuple[int, ...]


def as_fraction(x: Rational) -> Fraction:
    """Convert ``x`` to an exact rational.  Floats are refused on purpose."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {x!r}") from exc
    raise TypeError(f"expected an int, Fraction or 'p/q' string, got {type(x).__name__}")


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class LeadFunction:
    """Affine lead ``alpha * b + beta`` with ``alpha >= 0``."""

    alpha: Fraction = Fraction(1)
    beta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))
        if self.alpha < 0:
            raise ValueError("lead slope must be nonnegative")

    def __call__(self, bits: int) -> Fraction:
        return self.alpha * bits + self.beta

    @property
    def is_identity(self) -> bool:
        return self.alpha == 1 and self.beta == 0


@dataclass(frozen=True)
class Instance:
    """An ``n x B`` matrix of nonnegative integer bit rates plus a lead function.

    ``rates`` is stored as a tuple of tuples so instances are hashable and
    safe to share.  Any nested sequence or 2-D integer array is accepted.
    """

    rates: Tuple[Tuple[int, ...], ...]
    lead: LeadFunction = field(default_factory=LeadFunction)

    def __post_init__(self):
        rows = self.rates
        if isinstance(rows, np.ndarray):
            if rows.ndim != 2:
                raise InstanceShapeError("rate array must be two-dimensional")
            rows = rows.tolist()
        try:
            rows = tuple(tuple(row) for row in rows)
        except TypeError as exc:
            raise InstanceShapeError("rates must be a sequence of rows") from exc
        if not rows or not rows[0]:
            raise InstanceShapeError("need at least one video and one slot")
        width = len(rows[0])
        clean = []
        for i, row in enumerate(rows):
            if len(row) != width:
                raise InstanceShapeError(
                    f"row {i} has {len(row)} slots, expected {width}")
            out = []
            for r in row:
                if isinstance(r, bool) or not isinstance(r, numbers.Integral):
                    raise TypeError(f"rates must be integers, got {r!r}")
                r = int(r)
                if r < 0 or r > RATE_CAP:
                    raise CapacityError(f"rate {r} outside [0, {RATE_CAP}]")
                out.append(r)
            clean.append(tuple(out))
        object.__setattr__(self, "rates", tuple(clean))
        if not isinstance(self.lead, LeadFunction):
            raise TypeError("lead must be a LeadFunction")

    @property
    def n(self) -> int:
        return len(self.rates)

    @property
    def B(self) -> int:
        return len(self.rates[0])

    def rate(self, video: int, slot: int) -> int:
        return self.rates[video][slot]


@dataclass(frozen=True)
class Allocation:
    """Per-slot owner: ``assign[j]`` is a video index or ``UNASSIGNED``."""

    assign: Tuple[Optional[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "assign", tuple(
            None if a is None else int(a) for a in self.assign))

    def __len__(self):
        return len(self.assign)

    def __iter__(self):
        return iter(self.assign)

    def __getitem__(self, j):
        return self.assign[j]

    @classmethod
    def empty(cls, B: int) -> "Allocation":
        return cls((UNASSIGNED,) * B)


AllocationLike = Union[Allocation, Sequence[Optional[int]]]


@dataclass
class SolveReport:
    """Outcome of one solver run.

    ``value`` is the objective the solver vouches for.  For the rounded DP it
    is the grid value and ``true_value`` is the real objective of
    ``allocation``, which is never smaller.
    """

    value: int
    allocation: Allocation
    states_visited: int
    layers: int
    elapsed_ms: float
    algorithm: str
    true_value: Optional[int] = None
    epsilon: Optional[Fraction] = None
    layer_sizes: Tuple[int, ...] = ()


def _check_allocation(inst: Instance, a: AllocationLike) -> Tuple[Optional[int], ...]:
    assign = a.assign if isinstance(a, Allocation) else tuple(a)
    if len(assign) != inst.B:
        raise InstanceShapeError(
            f"allocation covers {len(assign)} slots, instance has {inst.B}")
    for j, owner in enumerate(assign):
        if owner is UNASSIGNED:
            continue
        if isinstance(owner, bool) or not isinstance(owner, numbers.Integral):
            raise InvalidAllocationError(f"slot {j}: owner {owner!r} is not an index")
        if not 0 <= owner < inst.n:
            raise InvalidAllocationError(f"slot {j}: video {owner} not in [0, {inst.n})")
    return assign


def bits_received(inst: Instance, a: AllocationLike) -> Vector:
    """Bits delivered to each video under allocation ``a``."""
    assign = _check_allocation(inst, a)
    bits = [0] * inst.n
    for j, owner in enumerate(assign):
        if owner is not UNASSIGNED:
            bits[owner] += inst.rates[owner][j]
    return tuple(bits)


def objective(inst: Instance, a: AllocationLike) -> int:
    """Minimum bits received over all videos."""
    return min(bits_received(inst, a))


def b_max(inst: Instance) -> Vector:
    """Bits each video would get if it owned every slot."""
    out = tuple(sum(row) for row in inst.rates)
    for i, total in enumerate(out):
        if total > MAGNITUDE_CAP:
            raise CapacityError(f"video {i}: row sum {total} exceeds 2^63 - 1")
    return out


def decide_lead(inst: Instance, value: int, k: Rational) -> bool:
    """Does a min-bits ``value`` give every video a lead of at least ``k``?"""
    return inst.lead(value) >= as_fraction(k)


def rank_key(bits: Sequence[int]) -> Tuple[int, int, Vector]:
    """Sort key for the deterministic tie-break: min, then total, then lexicographic."""
    bits = tuple(bits)
    return (min(bits), sum(bits), bits)


def random_instance(n: int, B: int, max_rate: int,
                    rng: Union[np.random.Generator, int, None] = None) -> Instance:
    """Instance with rates drawn uniformly from ``[0, max_rate]``."""
    if n < 1 or B < 1:
        raise InstanceShapeError("need n >= 1 and B >= 1")
    if max_rate < 0 or max_rate > RATE_CAP:
        raise CapacityError(f"max_rate {max_rate} outside [0, {RATE_CAP}]")
    rng = np.random.default_rng(rng)
    rates = rng.integers(0, max_rate, size=(n, B), endpoint=True, dtype=np.int64)
    return Instance(rates)
