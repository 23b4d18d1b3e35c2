"""Exact model primitives for the airplane refueling problem.

A fleet of airplanes flies together along a line.  Airplane i carries fuel
v_i and burns fuel at rate c_i; while several airplanes fly together each
still burns at its own rate, and any airplane may transfer fuel to any
other instantaneously.  Airplanes drop out one at a time, and the drop
order pi determines how far the last airplane gets:

    S(pi) = sum_i  v_{pi(i)} / (c_{pi(i)} + C_{pi(i)})

where C_{pi(i)} is the total burn rate of the airplanes that fly on after
pi(i) drops (position 1 drops first, position n flies farthest).  All
arithmetic in this package is exact rational arithmetic; floats never
enter any decision.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Fraction

ScalarLike = Union[Scalar, int, str]


class AssumptionError(ValueError):
    """Raised when a structural precondition on an instance or parameters fails."""


def as_scalar(value: ScalarLike) -> Scalar:
    """Convert an exact input (int, Fraction, or decimal/rational string) to Scalar.

    Floats are rejected: binary floats silently misrepresent decimal inputs,
    and every downstream comparison relies on exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("scalar values must be numbers, not bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(
            "float scalar %r rejected: pass a string (e.g. '961.8') or Fraction "
            "to keep arithmetic exact" % (value,)
        )
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError("cannot parse scalar from %r" % (value,)) from exc
    raise TypeError("cannot convert %r to a scalar" % (value,))


@dataclass(frozen=True)
class Airplane:
    """One airplane: identity, fuel volume v > 0, burn rate c > 0."""

    id: int
    v: Scalar
    c: Scalar

    def __post_init__(self) -> None:
        if not isinstance(self.id, int) or isinstance(self.id, bool) or self.id < 1:
            raise ValueError("airplane id must be a positive integer, got %r" % (self.id,))
        object.__setattr__(self, "v", as_scalar(self.v))
        object.__setattr__(self, "c", as_scalar(self.c))
        if self.v <= 0:
            raise ValueError("airplane %d: fuel volume must be positive" % self.id)
        if self.c <= 0:
            raise ValueError("airplane %d: burn rate must be positive" % self.id)

    @property
    def range_ratio(self) -> Scalar:
        """v/c: solo range, and the dominant ratio when little else is flying along."""
        return self.v / self.c

    @property
    def design_ratio(self) -> Scalar:
        """v/c^2: the dominant ratio when the rest of the fleet burns much more."""
        return self.v / (self.c * self.c)


@dataclass(frozen=True)
class Instance:
    """An ordered fleet of airplanes with distinct ids.

    The tuple order is the labelling A_1, ..., A_n; several operations
    (classification, stability-index estimation) read meaning into it.
    """

    airplanes: tuple[Airplane, ...]

    def __post_init__(self) -> None:
        planes = tuple(self.airplanes)
        object.__setattr__(self, "airplanes", planes)
        if not planes:
            raise ValueError("instance must contain at least one airplane")
        ids = [a.id for a in planes]
        if len(set(ids)) != len(ids):
            raise ValueError("airplane ids must be distinct")

    @property
    def n(self) -> int:
        return len(self.airplanes)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(a.id for a in self.airplanes)

    @property
    def total_rate(self) -> Scalar:
        return sum((a.c for a in self.airplanes), Fraction(0))

    def airplane(self, airplane_id: int) -> Airplane:
        for a in self.airplanes:
            if a.id == airplane_id:
                return a
        raise KeyError("no airplane with id %r" % (airplane_id,))

    def index_of(self, airplane_id: int) -> int:
        for k, a in enumerate(self.airplanes):
            if a.id == airplane_id:
                return k
        raise KeyError("no airplane with id %r" % (airplane_id,))


@dataclass(frozen=True)
class Schedule:
    """A drop order together with the travel distance of every airplane.

    ``order`` lists airplane ids, first drop first; ``distances`` aligns with
    ``order`` and gives how far each airplane flies; ``total`` is the distance
    of the last airplane, the quantity a solver maximizes.
    """

    order: tuple[int, ...]
    distances: tuple[Scalar, ...]
    total: Scalar


class InstanceClass(enum.Enum):
    """Structural classes defined by how the two ratio orders relate.

    ALIGNED: one labelling sorts both v/c and v/c^2 in increasing order.
    CROSSING: one labelling sorts v/c^2 strictly decreasing while v/c is
        strictly increasing, so every pair of airplanes swaps preference at
        a positive crossing load.
    MIXED: neither pattern holds, or ratio ties prevent a strict ordering.
    """

    ALIGNED = "Aligned"
    CROSSING = "Crossing"
    MIXED = "Mixed"


@dataclass(frozen=True)
class AssumptionParams:
    """Quantitative niceness bounds used by the crossing-regime generator.

    min_ratio_gap: least allowed gap between consecutive v/c ratios.
    max_ratio: upper bound on every v/c.
    max_rate: upper bound on every burn rate c.
    """

    min_ratio_gap: Scalar = Fraction(1, 1000)
    max_ratio: Scalar = Fraction(8000)
    max_rate: Scalar = Fraction(4000)

    def __post_init__(self) -> None:
        object.__setattr__(self, "min_ratio_gap", as_scalar(self.min_ratio_gap))
        object.__setattr__(self, "max_ratio", as_scalar(self.max_ratio))
        object.__setattr__(self, "max_rate", as_scalar(self.max_rate))
        for name in ("min_ratio_gap", "max_ratio", "max_rate"):
            if getattr(self, name) <= 0:
                raise ValueError("%s must be positive" % name)


def phi(airplane: Airplane, context: ScalarLike) -> Scalar:
    """Marginal distance rate v/(c*(c+C)) of an airplane dropped ahead of load C.

    ``context`` is the total burn rate of the airplanes that keep flying after
    this one drops.  Moving an airplane with larger phi later in the order
    gains distance, so phi comparisons drive every solver here.
    """
    C = as_scalar(context)
    if C < 0:
        raise ValueError("context load must be nonnegative")
    return airplane.v / (airplane.c * (airplane.c + C))


def phi_le(a: Airplane, b: Airplane, context: ScalarLike) -> bool:
    """Exact test phi(a, C) <= phi(b, C) by cross multiplication.

    Equivalent to comparing the two fractions but avoids building them;
    the same rearrangement, on integers, is the hot path of the solvers.
    """
    C = as_scalar(context)
    if C < 0:
        raise ValueError("context load must be nonnegative")
    return a.v * b.c * (b.c + C) <= b.v * a.c * (a.c + C)


def total_distance(instance: Instance, order: Sequence[int]) -> Schedule:
    """Evaluate a drop order exactly: per-airplane distances and the total.

    ``order`` is a permutation of the instance's airplane ids, first drop
    first.  Leg t (between drops t-1 and t) has length v_{pi(t)} divided by
    the combined burn rate of the airplanes still flying, and the airplane
    dropped at position i travels the first i legs.
    """
    ids = tuple(order)
    if sorted(ids) != sorted(instance.ids):
        raise ValueError("order %r is not a permutation of instance ids" % (ids,))
    planes = [instance.airplane(i) for i in ids]
    n = len(planes)
    suffix = [Fraction(0)] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + planes[k].c
    distances = []
    travelled = Fraction(0)
    for k in range(n):
        travelled += planes[k].v / suffix[k]
        distances.append(travelled)
    return Schedule(order=ids, distances=tuple(distances), total=travelled)


def crossing_point(a: Airplane, b: Airplane) -> Optional[Scalar]:
    """Context load at which airplanes a and b swap phi preference, if any.

    Solving phi(a, C) = phi(b, C) for C gives

        C* = (v_b - v_a) / (v_b/c_b - v_a/c_a) - c_a - c_b.

    Returns C* when it is positive; returns None when the ratios v/c tie
    (no finite crossing) or the crossing falls at a nonpositive load (one
    airplane dominates at every reachable context).
    """
    d = delta(a, b)
    if d == 0:
        return None
    cstar = (b.v - a.v) / d - a.c - b.c
    if cstar <= 0:
        return None
    return cstar


def delta(a: Airplane, b: Airplane) -> Scalar:
    """Range-ratio gap v_b/c_b - v_a/c_a; its sign orients every crossing."""
    return b.v / b.c - a.v / a.c


def integer_view(instance: Instance) -> tuple[list[int], list[int]]:
    """Integer copies of all v and c on common denominators.

    phi comparisons and crossing signs are invariant under scaling every v
    by one positive factor and every c (hence every context built from
    them) by another, so solvers can run on plain integers.
    """
    vden = 1
    cden = 1
    for a in instance.airplanes:
        vden = vden * a.v.denominator // math.gcd(vden, a.v.denominator)
        cden = cden * a.c.denominator // math.gcd(cden, a.c.denominator)
    vs = [int(a.v * vden) for a in instance.airplanes]
    cs = [int(a.c * cden) for a in instance.airplanes]
    return vs, cs


def is_sequential_feasible(instance: Instance, order: Sequence[int]) -> bool:
    """Whether a drop order is stable under adjacent exchanges.

    For each neighbouring pair in the drop order, swapping the two airplanes
    changes the total distance by an amount whose sign is the sign of the
    phi difference evaluated at the load beyond both of them.  The order is
    feasible when no adjacent swap gains distance: with pi(l) dropping just
    before pi(l+1) and C the combined burn rate of the airplanes after
    position l+1,

        phi(pi(l), C) <= phi(pi(l+1), C)    for every l.

    Every globally optimal order is feasible, and greedy construction always
    lands inside the feasible set, which is why counting this set bounds the
    work of any solver that walks it.
    """
    ids = tuple(order)
    if sorted(ids) != sorted(instance.ids):
        raise ValueError("order %r is not a permutation of instance ids" % (ids,))
    vs, cs = integer_view(instance)
    pos = {a.id: k for k, a in enumerate(instance.airplanes)}
    seq = [pos[i] for i in ids]
    n = len(seq)
    suffix = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + cs[seq[k]]
    for l in range(n - 1):
        a = seq[l]
        b = seq[l + 1]
        C = suffix[l + 2]
        if vs[a] * cs[b] * (cs[b] + C) > vs[b] * cs[a] * (cs[a] + C):
            return False
    return True


def relabel_by_design_ratio(instance: Instance) -> Instance:
    """Reorder the fleet so labels run in non-increasing v/c^2 (ids kept).

    Ties sort by id.  This is the labelling the index estimators expect.
    """
    planes = sorted(
        instance.airplanes, key=lambda a: (-a.design_ratio, a.id)
    )
    return Instance(airplanes=tuple(planes))


def classify(instance: Instance) -> tuple[InstanceClass, bool]:
    """Classify an instance by its ratio orders; also report ratio ties.

    The ties flag is set when two airplanes share v/c or share v/c^2.  Any
    tie forces MIXED: the strict orderings that make ALIGNED and CROSSING
    analytically useful do not exist then.
    """
    planes = instance.airplanes
    r1 = [a.range_ratio for a in planes]
    r2 = [a.design_ratio for a in planes]
    ties = len(set(r1)) != len(r1) or len(set(r2)) != len(r2)
    if ties:
        return InstanceClass.MIXED, True
    order = sorted(range(len(planes)), key=lambda k: r2[k])
    aligned = all(r1[order[k]] < r1[order[k + 1]] for k in range(len(order) - 1))
    if aligned:
        return InstanceClass.ALIGNED, False
    crossing = all(r1[order[k]] > r1[order[k + 1]] for k in range(len(order) - 1))
    if crossing and len(planes) >= 2:
        return InstanceClass.CROSSING, False
    return InstanceClass.MIXED, False
