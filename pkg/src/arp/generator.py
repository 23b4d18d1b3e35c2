"""Instance generators: a fixed benchmark family and seeded random families.

Every generator is a pure function of its arguments; the random families
derive all draws from a SplitMix64 stream seeded by the caller, so a seed
pins the instance exactly, across platforms.  All generated values live
on decimal grids and are stored as exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    Airplane,
    AssumptionError,
    AssumptionParams,
    Instance,
    Scalar,
    as_scalar,
    relabel_by_design_ratio,
)

_MASK = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit generator backing all randomized construction.

    Small, portable, and stateful only through a single 64-bit word, so
    generated instances are reproducible from (generator, n, seed) alone.
    """

    def __init__(self, seed: int) -> None:
        self._x = seed & _MASK

    def next_u64(self) -> int:
        self._x = (self._x + 0x9E3779B97F4A7C15) & _MASK
        z = self._x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection to avoid modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = _MASK - (_MASK + 1) % bound
        while True:
            u = self.next_u64()
            if u <= limit:
                return u % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)


@dataclass(frozen=True)
class GeneratorParams:
    """Arguments of the crossing-regime generator.

    n: fleet size; seed: stream seed; c_target: the load the pairwise
    crossing points are scattered around (resolution 0.001); assumptions:
    niceness bounds the construction must respect.
    """

    n: int
    seed: int
    c_target: Scalar = Fraction(2000)
    assumptions: AssumptionParams = field(default_factory=AssumptionParams)

    def __post_init__(self) -> None:
        object.__setattr__(self, "c_target", as_scalar(self.c_target))
        if self.n < 2:
            raise ValueError("crossing-regime instances need at least 2 airplanes")
        if self.c_target < 1:
            raise ValueError("c_target must be at least 1")


def _round_half_up_tenths(x: Fraction) -> Fraction:
    """Round to one decimal place, halves away from zero (for x >= 0)."""
    tenx = x * 10
    floor = tenx.numerator // tenx.denominator
    if tenx - floor >= Fraction(1, 2):
        floor += 1
    return Fraction(floor, 10)


def benchmark_family(n: int, rounded: bool = True) -> Instance:
    """The deterministic benchmark fleet with a common crossing design.

    Airplane i (1-based) has burn rate c_i = i + 1 and fuel volume
    c_i * (c_i + 2000) / 1001; with exact volumes every pair of airplanes
    swaps phi preference at exactly load 2000.  By default volumes are
    rounded to one decimal, which scatters the pairwise crossings around
    2000 but keeps v/c^2 strictly decreasing and leaves the last airplane
    with the strictly largest v/c, so the exact index estimator applies.
    Pass ``rounded=False`` for the exact common-crossing volumes.
    """
    if not 2 <= n <= 1000:
        raise ValueError("benchmark family is defined for 2 <= n <= 1000")
    planes = []
    for i in range(1, n + 1):
        c = Fraction(i + 1)
        v = c * (c + 2000) / 1001
        if rounded:
            v = _round_half_up_tenths(v)
        planes.append(Airplane(id=i, v=v, c=c))
    return Instance(airplanes=tuple(planes))


def random_crossing(params: GeneratorParams) -> Instance:
    """Random fleet in the crossing regime, labelled in crossing order.

    Construction: burn rates increase in steps of 0.6..2.0; each airplane
    gets a per-airplane crossing anchor K_i, strictly decreasing on a 0.001
    grid inside [c_target, 1.1 * c_target], and volume v_i = c_i (c_i + K_i).
    Then v/c^2 = 1 + K_i/c_i strictly decreases while v/c = c_i + K_i
    strictly increases, every pairwise crossing load is positive (scattered
    near c_target), and consecutive v/c gaps are at least 0.1.  Raises
    AssumptionError when the requested bounds cannot hold for this n.
    """
    a = params.assumptions
    if a.min_ratio_gap > Fraction(1, 10):
        raise AssumptionError("min_ratio_gap above 0.1 exceeds the construction's resolution")
    rng = SplitMix64(params.seed)
    n = params.n
    # tenths grid for rates, milli grid for anchors
    ct = rng.randint(10, 30)
    rates_tenths = [ct]
    for _ in range(n - 1):
        ct += rng.randint(6, 20)
        rates_tenths.append(ct)
    if Fraction(rates_tenths[-1], 10) > a.max_rate:
        raise AssumptionError(
            "max_rate %s cannot hold %d airplanes at this rate spread"
            % (a.max_rate, n)
        )
    t_milli = int(params.c_target * 1000)
    km = t_milli + rng.randint(0, t_milli // 10)
    anchors_milli = [km]
    for _ in range(n - 1):
        km -= rng.randint(1, 500)
        if km <= 0:
            raise AssumptionError("c_target too small for %d airplanes" % n)
        anchors_milli.append(km)
    top_ratio = Fraction(rates_tenths[-1], 10) + Fraction(anchors_milli[-1], 1000)
    if top_ratio > a.max_ratio:
        raise AssumptionError(
            "max_ratio %s cannot hold %d airplanes near crossing load %s"
            % (a.max_ratio, n, params.c_target)
        )
    planes = []
    for i in range(n):
        c = Fraction(rates_tenths[i], 10)
        k = Fraction(anchors_milli[i], 1000)
        planes.append(Airplane(id=i + 1, v=c * (c + k), c=c))
    return Instance(airplanes=tuple(planes))


def random_general(n: int, seed: int) -> Instance:
    """Unstructured random fleet on a decimal grid, all (v, c) pairs distinct.

    Distinctness matters: two identical airplanes tie in phi at every load,
    which doubles the stable set without bound and says nothing about the
    generic case the counting bounds describe.
    """
    if n < 1:
        raise ValueError("need at least one airplane")
    rng = SplitMix64(seed)
    seen = set()
    planes = []
    for i in range(n):
        for _ in range(1000):
            v10 = rng.randint(10, 50000)
            c10 = rng.randint(10, 3000)
            if (v10, c10) not in seen:
                seen.add((v10, c10))
                break
        else:  # pragma: no cover
            raise RuntimeError("could not draw a fresh (v, c) pair")
        planes.append(Airplane(id=i + 1, v=Fraction(v10, 10), c=Fraction(c10, 10)))
    return Instance(airplanes=tuple(planes))


def random_subset(instance: Instance, k: int, seed: int) -> Instance:
    """Keep k airplanes chosen uniformly at random, relabelled canonically.

    Ids are preserved; the surviving airplanes are reordered into
    non-increasing v/c^2 (ties by id), the labelling the index estimators
    expect.  With k = n this is just the canonical relabelling of the
    input.  Subsets inherit the crossing regime: removing airplanes cannot
    create ratio ties or reorder the surviving ratios.
    """
    n = instance.n
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n, got k=%d n=%d" % (k, n))
    rng = SplitMix64(seed)
    idx = list(range(n))
    for j in range(k):
        swap = rng.randint(j, n - 1)
        idx[j], idx[swap] = idx[swap], idx[j]
    chosen = sorted(idx[:k])
    sub = Instance(airplanes=tuple(instance.airplanes[i] for i in chosen))
    return relabel_by_design_ratio(sub)

