"""Bounds and index estimates for the number of exchange-stable drop orders.

The count of drop orders stable under adjacent exchanges is at most
2^(n-2) and exactly hits that bound on worst-case fleets.  When one
airplane out-ranges the rest, the count collapses: if the top v/c
airplane can only appear within the last m positions, the count is at
most sum_{p<m} C(n-2, p), which is polynomial in n once n > 2m.  This
module computes those bounds exactly and estimates m two ways: an exact
fixed-point loop for fleets labelled in crossing order, and a sweep
heuristic that works on any labelling.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .core import AssumptionError, Instance, crossing_point, integer_view

try:  # optional C-backed rationals; results are identical either way
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction


def _sci3(value: Union[int, Fraction]) -> str:
    """Normalized scientific notation with 3 significant digits, e.g. '2.68e300'."""
    f = Fraction(value)
    if f == 0:
        return "0.00e0"
    sign = "-" if f < 0 else ""
    with localcontext() as ctx:
        ctx.prec = 30
        d = Decimal(abs(f.numerator)) / Decimal(f.denominator)
    mantissa, exponent = f"{d:.2E}".split("E")
    return "%s%se%d" % (sign, mantissa, int(exponent))


@dataclass(frozen=True)
class BigCount:
    """An exact count (or rational bound) with a compact scientific rendering."""

    value: Union[int, Fraction]

    def __post_init__(self) -> None:
        v = self.value
        if isinstance(v, Fraction) and v.denominator == 1:
            object.__setattr__(self, "value", int(v))

    @property
    def scientific(self) -> str:
        return _sci3(self.value)

    def exact_text(self) -> str:
        v = self.value
        if isinstance(v, Fraction):
            return "%d/%d" % (v.numerator, v.denominator)
        return str(v)

    def __str__(self) -> str:
        return self.scientific


class Regime(enum.Enum):
    EXPONENTIAL = "Exponential"
    POLYNOMIAL = "Polynomial"


@dataclass(frozen=True)
class ComplexityReport:
    """Stable-order growth diagnosis for one instance.

    Exactly one of m (exact loop estimate) and m_prime (sweep heuristic)
    is set.  The bounds are evaluated at that index, and the regime is
    POLYNOMIAL when n exceeds twice the index, the point past which the
    binomial-sum bound stops growing exponentially.
    """

    n: int
    m: Optional[int]
    m_prime: Optional[int]
    q_star: BigCount
    q_m_exact: BigCount
    q_m_bound: BigCount
    regime: Regime


def q_star(n: int) -> BigCount:
    """Worst-case number of exchange-stable drop orders: 2^(n-2)."""
    if n < 2:
        raise ValueError("q_star needs at least 2 airplanes")
    return BigCount(1 << (n - 2))


def q_m_exact(n: int, m: int) -> BigCount:
    """Projected stable-order count when the top-ratio airplane stays within the last m positions.

    Equals sum_{p=0}^{m-1} C(n-2, p): one term per choice of the p
    airplanes displaced past the top one, assuming at most m-1 such
    displacements.  A complexity yardstick for growth-regime analysis,
    not a certified per-instance cap on the enumerated count.
    """
    if not 1 <= m <= n - 1:
        raise ValueError("need 1 <= m <= n-1, got n=%d m=%d" % (n, m))
    return BigCount(sum(math.comb(n - 2, p) for p in range(m)))


def q_m_bound(n: int, m: int) -> BigCount:
    """Closed-form cap (m^2/n) * C(n, m) on the binomial sum of ``q_m_exact``."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n, got n=%d m=%d" % (n, m))
    return BigCount(Fraction(m * m, n) * math.comb(n, m))


def growth_ratio(n: int, m: int) -> Fraction:
    """Factor n/(n+1-m) by which the closed-form cap grows from n to n+1."""
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n, got n=%d m=%d" % (n, m))
    return Fraction(n, n + 1 - m)


def _require_crossing_labels(instance: Instance) -> None:
    """Estimator gate: v/c^2 strictly decreasing along labels, last label strictly
    out-ranging everybody in v/c."""
    planes = instance.airplanes
    n = len(planes)
    if n < 2:
        raise AssumptionError("index estimation needs at least 2 airplanes")
    for k in range(n - 1):
        if not planes[k].design_ratio > planes[k + 1].design_ratio:
            raise AssumptionError(
                "labels %d,%d: v/c^2 must strictly decrease along the labelling"
                % (planes[k].id, planes[k + 1].id)
            )
    last = planes[-1]
    for k in range(n - 1):
        if not planes[k].range_ratio < last.range_ratio:
            raise AssumptionError(
                "label %d: the last airplane must have the strictly largest v/c"
                % (planes[k].id,)
            )


def estimate_m(instance: Instance) -> ComplexityReport:
    """Exact stability index of the out-ranging airplane, by fixed-point loop.

    Preconditions: the labelling sorts v/c^2 strictly decreasing, and the
    last airplane A_n has the strictly largest v/c, so A_n wins every
    pairwise comparison once the flying load is large enough.  Starting
    from the prefix load C = c_1, grow the prefix while some unfixed
    airplane (other than A_n) still beats A_n at the current load:

        while phi(A_n, C) < max over the pool of phi(., C):
            fix the next label into the prefix and add its rate to C

    The final prefix length m is the smallest one whose load covers every
    remaining crossing against A_n, so beyond that load A_n's lead is
    settled.  It indexes the ``q_m_exact``/``q_m_bound`` projections.
    """
    _require_crossing_labels(instance)
    vs, cs = integer_view(instance)
    n = instance.n
    m = 1
    C = cs[0]
    pool = list(range(1, n - 1))
    vn = vs[n - 1]
    cn = cs[n - 1]
    while m < n - 1:
        best = pool[0]
        vb = vs[best]
        cb = cs[best]
        for r in pool[1:]:
            if vs[r] * cb * (cb + C) > vb * cs[r] * (cs[r] + C):
                best = r
                vb = vs[best]
                cb = cs[best]
        # stop once the out-ranging airplane matches the pool's best phi
        if vn * cb * (cb + C) >= vb * cn * (cn + C):
            break
        pool.remove(m)
        m += 1
        C += cs[m - 1]
    return ComplexityReport(
        n=n,
        m=m,
        m_prime=None,
        q_star=q_star(n),
        q_m_exact=q_m_exact(n, m),
        q_m_bound=q_m_bound(n, m),
        regime=Regime.POLYNOMIAL if n > 2 * m else Regime.EXPONENTIAL,
    )


def _crossing_scan_m(instance: Instance) -> int:
    """Independent route to the stability index, via crossing loads.

    A_n stops losing to A_r exactly at their crossing load, so the index is
    the smallest m whose prefix load C_m covers every crossing with the
    airplanes still outside the prefix.  Used to cross-check ``estimate_m``.
    """
    _require_crossing_labels(instance)
    planes = instance.airplanes
    n = len(planes)
    if n == 2:
        return 1
    zero = Fraction(0)
    thresholds = [zero] * n  # by 0-based label index, for labels 1..n-2
    for r in range(1, n - 1):
        t = crossing_point(planes[r], planes[n - 1])
        thresholds[r] = t if t is not None else zero
    suffix_max = [zero] * (n + 1)
    for r in range(n - 2, 0, -1):
        suffix_max[r] = max(thresholds[r], suffix_max[r + 1])
    prefix = zero
    for m in range(1, n - 1):
        prefix += planes[m - 1].c
        # labels beyond the prefix are 1-based r > m, 0-based indices >= m
        if prefix >= suffix_max[m]:
            return m
    return n - 1


def _greedy_rest_exact(
    vs: list[int], cs: list[int], ids: list[int], pool: list[int], load: int
) -> list[int]:
    """Exact far-end-first greedy over ``pool`` starting at the given load.

    Returns the picked indices in far-to-near order; phi ties go to the
    smallest airplane id.  Reference path for the vectorized sweep.
    """
    remaining = sorted(pool, key=lambda k: ids[k])
    order: list[int] = []
    C = load
    while remaining:
        best = remaining[0]
        for cand in remaining[1:]:
            if vs[cand] * cs[best] * (cs[best] + C) > vs[best] * cs[cand] * (
                cs[cand] + C
            ):
                best = cand
        order.append(best)
        remaining.remove(best)
        C += cs[best]
    return order


def _sum_key(vs: list[int], cs: list[int], far_order: list[int]):
    """Exact scaled total distance of a far-to-near placement (comparison key)."""
    total = _mpq(0)
    load = 0
    for p in far_order:
        total += _mpq(vs[p], cs[p] + load)
        load += cs[p]
    return total


def _heuristic_sweep_exact(instance: Instance) -> tuple[int, list[int]]:
    """Reference sweep: all-rational arithmetic, no vectorization.

    Returns (winning fixed label position, winning far-to-near order).
    """
    vs, cs = integer_view(instance)
    ids = [a.id for a in instance.airplanes]
    n = instance.n
    best_i = -1
    best_key = None
    best_far: list[int] = []
    for i in range(n - 1):
        rest = [k for k in range(n) if k != i]
        far = [i] + _greedy_rest_exact(vs, cs, ids, rest, cs[i])
        key = _sum_key(vs, cs, far)
        if best_key is None or key > best_key:
            best_key = key
            best_i = i
            best_far = far
    return best_i, best_far


_BAND = 1e-9  # relative float slack below which comparisons go exact


def _sweep_fast(instance: Instance) -> tuple[int, list[int]]:
    """Vectorized sweep: float argmax everywhere, exact arithmetic on demand.

    Float keys carry ~1e-15 relative error, so any decision within _BAND is
    re-run on the scaled integers; outcomes match ``_heuristic_sweep_exact``
    exactly.  Returns (winning fixed label position, winning far order).
    """
    vs, cs = integer_view(instance)
    ids = [a.id for a in instance.airplanes]
    n = instance.n
    # cs[k] = c_k * cscale, so the true load float is the integer load / cscale
    cscale = float(Fraction(cs[0]) / instance.airplanes[0].c)
    vf_all = np.array([float(a.v) for a in instance.airplanes])
    cf_all = np.array([float(a.c) for a in instance.airplanes])

    def run(i: int) -> list[int]:
        sel = [k for k in range(n) if k != i]
        vf = vf_all[sel].copy()
        cf = cf_all[sel].copy()
        idx = np.array(sel)
        sz = n - 1
        far = [i]
        load = cs[i]
        t = np.empty(sz)
        while sz > 1:
            Ct = load / cscale
            tv = t[:sz]
            np.add(cf[:sz], Ct, out=tv)
            np.multiply(tv, cf[:sz], out=tv)
            np.divide(vf[:sz], tv, out=tv)
            j = int(np.argmax(tv))
            thresh = tv[j] * (1.0 - _BAND)
            if int(np.count_nonzero(tv >= thresh)) > 1:
                cand = [int(idx[k]) for k in np.nonzero(tv >= thresh)[0]]
                j_exact = min(cand, key=lambda p: ids[p])
                for p in cand:
                    if vs[p] * cs[j_exact] * (cs[j_exact] + load) > vs[j_exact] * cs[
                        p
                    ] * (cs[p] + load) or (
                        vs[p] * cs[j_exact] * (cs[j_exact] + load)
                        == vs[j_exact] * cs[p] * (cs[p] + load)
                        and ids[p] < ids[j_exact]
                    ):
                        j_exact = p
                j = int(np.nonzero(idx[:sz] == j_exact)[0][0])
            pick = int(idx[j])
            far.append(pick)
            load += cs[pick]
            sz -= 1
            vf[j] = vf[sz]
            cf[j] = cf[sz]
            idx[j] = idx[sz]
        far.append(int(idx[0]))
        return far

    runs = [run(i) for i in range(n - 1)]
    # float totals first; exact re-evaluation only inside the tie band
    totals = []
    for far in runs:
        o = np.array(far)
        csum = np.cumsum(cf_all[o])
        totals.append(float(np.sum(vf_all[o] / csum)))
    top = max(totals)
    band = [i for i, s in enumerate(totals) if s >= top * (1.0 - _BAND)]
    best_i = band[0]
    if len(band) > 1:
        best_key = None
        for i in band:
            key = _sum_key(vs, cs, runs[i])
            if best_key is None or key > best_key:
                best_key = key
                best_i = i
    return best_i, runs[best_i]


def heuristic_m(instance: Instance, exact: bool = False) -> ComplexityReport:
    """Sweep heuristic for the displacement index of the top-ratio airplane.

    Requires only a labelling with v/c^2 non-increasing (see
    ``core.relabel_by_design_ratio``).  For each label i < n, fix A_i at
    the farthest position and fill the rest far-to-near by greedy phi
    picks; keep the sweep's best total distance (ties to the smallest i).
    In the winning order, m' counts the airplanes flying farther than the
    airplane with the largest v/c (ratio ties resolved toward the farthest
    such airplane, minimizing m').  The report's bounds are evaluated at
    max(m', 1) since the binomial-sum bound needs a positive index.

    ``exact=True`` forces the all-rational reference sweep; the default
    vectorized sweep returns identical results and exists only for speed.
    """
    planes = instance.airplanes
    n = len(planes)
    if n < 2:
        raise AssumptionError("index estimation needs at least 2 airplanes")
    for k in range(n - 1):
        if planes[k].design_ratio < planes[k + 1].design_ratio:
            raise AssumptionError(
                "labels %d,%d: label airplanes with v/c^2 non-increasing first"
                % (planes[k].id, planes[k + 1].id)
            )
    if exact or n < 8:
        _, far = _heuristic_sweep_exact(instance)
    else:
        _, far = _sweep_fast(instance)
    top = max(a.range_ratio for a in planes)
    # far[k] sits k positions from the far end, so m' is the smallest such k
    m_prime = min(k for k, p in enumerate(far) if planes[p].range_ratio == top)
    idx = max(m_prime, 1)
    return ComplexityReport(
        n=n,
        m=None,
        m_prime=m_prime,
        q_star=q_star(n),
        q_m_exact=q_m_exact(n, min(idx, n - 1)),
        q_m_bound=q_m_bound(n, idx),
        regime=Regime.POLYNOMIAL if n > 2 * m_prime else Regime.EXPONENTIAL,
    )
