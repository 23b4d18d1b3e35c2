"""Exact solvers over drop orders: brute force, greedy, and pruned search.

All solvers work on integer-scaled copies of the fuel volumes and burn
rates (see ``core.integer_view``), so every preference test is an integer
cross-multiplication and every reported distance is an exact rational.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Optional

from .core import Instance, Schedule, integer_view, total_distance

try:  # optional C-backed rationals; results are identical either way
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction


class GuardError(RuntimeError):
    """Raised when a factorial-time solver is asked for more airplanes than its guard allows."""


class SearchMode(enum.Enum):
    OPTIMIZE_ONLY = "OptimizeOnly"
    COUNT_ONLY = "CountOnly"
    OPTIMIZE_AND_COUNT = "OptimizeAndCount"
    ENUMERATE_ALL = "EnumerateAll"


@dataclass(frozen=True)
class SearchOptions:
    """Knobs shared by the solvers.

    mode: what ``sequential_search`` should produce.
    max_bruteforce_n: refusal threshold for the factorial-time routines;
        raising it is the explicit override for larger instances.
    worker_hint: number of processes ``sequential_search`` may fan the
        top-level branches across.  Results never depend on it.
    """

    mode: SearchMode = SearchMode.OPTIMIZE_AND_COUNT
    max_bruteforce_n: int = 10
    worker_hint: int = 1

    def __post_init__(self) -> None:
        if self.max_bruteforce_n < 1:
            raise ValueError("max_bruteforce_n must be at least 1")
        if self.worker_hint < 1:
            raise ValueError("worker_hint must be at least 1")


@dataclass(frozen=True)
class Solution:
    """Solver output: the schedule found (if any), diagnostics, and counts.

    q_count is the number of drop orders stable under adjacent exchanges
    (None when the mode did not ask for it); feasible_orders carries the
    full stable set in ENUMERATE_ALL mode; visited_nodes measures search
    effort in nodes of the search tree or permutations scanned.
    """

    schedule: Optional[Schedule]
    method: str
    q_count: Optional[int] = None
    visited_nodes: int = 0
    feasible_orders: Optional[frozenset[tuple[int, ...]]] = None


def _prepared(instance: Instance) -> tuple[list[int], list[int], list[int], list[int]]:
    """Scaled integer volumes/rates, airplane ids, and index order sorted by id."""
    vs, cs = integer_view(instance)
    ids = [a.id for a in instance.airplanes]
    by_id = sorted(range(len(ids)), key=lambda k: ids[k])
    return vs, cs, ids, by_id


def _check_guard(instance: Instance, options: SearchOptions, what: str) -> None:
    if instance.n > options.max_bruteforce_n:
        raise GuardError(
            "%s over %d airplanes scans %d! permutations; refusing above %d "
            "(raise SearchOptions.max_bruteforce_n to override)"
            % (what, instance.n, instance.n, options.max_bruteforce_n)
        )


def brute_force(instance: Instance, options: SearchOptions | None = None) -> Solution:
    """Scan every drop order and return an exact optimum.

    Ties in total distance resolve to the lexicographically smallest id
    sequence.  Guarded: refuses instances larger than
    ``options.max_bruteforce_n`` (default 10).
    """
    opts = options or SearchOptions()
    _check_guard(instance, opts, "brute force")
    vs, cs, ids, by_id = _prepared(instance)
    n = instance.n
    best_sum = None
    best_perm = None
    visited = 0
    zero = _mpq(0)
    for perm in permutations(by_id):
        visited += 1
        csum = 0
        total = zero
        for k in range(n - 1, -1, -1):
            p = perm[k]
            csum += cs[p]
            total += _mpq(vs[p], csum)
        if best_sum is None or total > best_sum:
            best_sum = total
            best_perm = perm
    order = tuple(ids[p] for p in best_perm)
    return Solution(
        schedule=total_distance(instance, order),
        method="brute_force",
        q_count=None,
        visited_nodes=visited,
    )


def enumerate_sfs_oracle(
    instance: Instance, options: SearchOptions | None = None
) -> frozenset[tuple[int, ...]]:
    """Reference enumeration of the adjacent-exchange-stable drop orders.

    Filters all n! permutations through the stability test; exists purely
    to cross-check the pruned search, so it shares no traversal logic with
    it.  Guarded like ``brute_force``.
    """
    opts = options or SearchOptions()
    _check_guard(instance, opts, "stable-set enumeration")
    vs, cs, ids, by_id = _prepared(instance)
    n = instance.n
    found = []
    for perm in permutations(by_id):
        suffix = 0
        ok = True
        # walk from the far end; check each adjacent pair at the load beyond both
        for k in range(n - 1, 0, -1):
            a = perm[k - 1]
            b = perm[k]
            if vs[a] * cs[b] * (cs[b] + suffix) > vs[b] * cs[a] * (cs[a] + suffix):
                ok = False
                break
            suffix += cs[b]
        if ok:
            found.append(tuple(ids[p] for p in perm))
    return frozenset(found)


def greedy_sequential(instance: Instance) -> Solution:
    """Build a drop order far end first, always taking the largest phi.

    The airplane placed at position l+1 (farther) sets the context for the
    choice at position l, so each pick maximizes phi at the load of the
    already-placed suffix; phi ties resolve to the smallest id.  The result
    is always stable under adjacent exchanges.
    """
    vs, cs, ids, by_id = _prepared(instance)
    pool = list(by_id)
    context = 0
    far_first: list[int] = []
    visited = 0
    while pool:
        best = pool[0]
        for cand in pool[1:]:
            visited += 1
            # strict improvement only, so earlier (smaller) ids win ties
            if vs[cand] * cs[best] * (cs[best] + context) > vs[best] * cs[cand] * (
                cs[cand] + context
            ):
                best = cand
        far_first.append(best)
        pool.remove(best)
        context += cs[best]
    order = tuple(ids[p] for p in reversed(far_first))
    return Solution(
        schedule=total_distance(instance, order),
        method="greedy",
        q_count=None,
        visited_nodes=visited,
    )


def _viable(b: int, others: Iterable[int], vs: list[int], cs: list[int], lo: int, hi: int) -> bool:
    """Whether airplane b can still find a feasible predecessor.

    b will be admitted under some later-placed airplane z at a context
    between lo (the current placed load) and hi (the whole fleet's load).
    Each pairwise phi comparison changes sign at most once as the load
    grows, so losing to nobody at both endpoints means losing to nobody
    anywhere in between, and the branch is dead.
    """
    vb = vs[b]
    cb = cs[b]
    for z in others:
        if z == b:
            continue
        vz = vs[z]
        cz = cs[z]
        if vb * cz * (cz + lo) <= vz * cb * (cb + lo):
            return True
        if vb * cz * (cz + hi) <= vz * cb * (cb + hi):
            return True
    return False


def _search_branch(
    vs: list[int],
    cs: list[int],
    ids: list[int],
    by_id_pool: list[int],
    root: int,
    total_rate: int,
    collect: bool,
) -> tuple[int, int, tuple[int, int], tuple[int, ...], list[tuple[int, ...]]]:
    """Run the pruned depth-first search below one farthest-position choice.

    Returns (leaf count, node count, best sum as (num, den), best far-first
    placement, collected far-first leaves).  Sums are Sum v_i/(c_i + C_i)
    in the scaled integers; callers only compare them, never report them.
    """
    count = 0
    nodes = 0
    best_sum = None
    best_far: tuple[int, ...] = ()
    leaves: list[tuple[int, ...]] = []

    def drop_ids(far: Iterable[int]) -> tuple[int, ...]:
        return tuple(ids[p] for p in reversed(tuple(far)))

    def rec(pool: list[int], placed: list[int], last: int, last_ctx: int, load: int, acc) -> None:
        nonlocal count, nodes, best_sum, best_far
        nodes += 1
        if not pool:
            count += 1
            if collect:
                leaves.append(tuple(placed))
            if best_sum is None or acc > best_sum or (
                acc == best_sum and drop_ids(placed) < drop_ids(best_far)
            ):
                best_sum = acc
                best_far = tuple(placed)
            return
        for y in pool:
            # admission: y must not beat its predecessor at the predecessor's load
            if vs[y] * cs[last] * (cs[last] + last_ctx) > vs[last] * cs[y] * (
                cs[y] + last_ctx
            ):
                continue
            rest = [b for b in pool if b != y]
            ok = True
            for b in rest:
                if not _viable(b, pool, vs, cs, load, total_rate):
                    ok = False
                    break
            if not ok:
                continue
            placed.append(y)
            rec(rest, placed, y, load, load + cs[y], acc + _mpq(vs[y], cs[y] + load))
            placed.pop()

    rec(
        [b for b in by_id_pool if b != root],
        [root],
        root,
        0,
        cs[root],
        _mpq(vs[root], cs[root]),
    )
    if best_sum is None:
        return 0, nodes, (0, 1), (), leaves
    frac = Fraction(int(best_sum.numerator), int(best_sum.denominator))
    return count, nodes, (frac.numerator, frac.denominator), best_far, leaves


def _branch_job(args) -> tuple[int, int, tuple[int, int], tuple[int, ...], list[tuple[int, ...]]]:
    return _search_branch(*args)


def sequential_search(instance: Instance, options: SearchOptions | None = None) -> Solution:
    """Walk the adjacent-exchange-stable drop orders without scanning all n!.

    The search places airplanes far end first.  A candidate is admitted only
    if it does not beat the airplane placed just beyond it at that airplane's
    placement load (exactly the stability test for that adjacent pair), and a
    branch is abandoned as soon as some leftover airplane can no longer be
    admitted under anybody (see ``_viable``).  Leaves of this tree are
    precisely the stable orders, so one traversal serves optimization,
    counting, and enumeration, per ``options.mode``:

    OPTIMIZE_ONLY      best schedule only.
    COUNT_ONLY         number of stable orders only.
    OPTIMIZE_AND_COUNT both (the default).
    ENUMERATE_ALL      both plus the full stable set.

    Distance ties resolve to the lexicographically smallest id sequence.
    ``options.worker_hint`` > 1 fans the farthest-position branches across
    processes; the merged result is identical to the serial one.
    """
    opts = options or SearchOptions()
    vs, cs, ids, by_id = _prepared(instance)
    total_rate = sum(cs)
    collect = opts.mode is SearchMode.ENUMERATE_ALL
    jobs = [(vs, cs, ids, by_id, root, total_rate, collect) for root in by_id]

    if opts.worker_hint > 1 and instance.n >= 4:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=opts.worker_hint) as pool:
            results = list(pool.map(_branch_job, jobs))
    else:
        results = [_branch_job(j) for j in jobs]

    count = 0
    nodes = 1  # the empty root placement
    best_key = None
    best_far: tuple[int, ...] = ()
    all_far: list[tuple[int, ...]] = []
    for (cnt, nds, (num, den), far, leaves) in results:
        count += cnt
        nodes += nds
        if cnt == 0:
            continue
        key = Fraction(num, den)
        drop_ids = tuple(ids[p] for p in reversed(far))
        if (
            best_key is None
            or key > best_key
            or (key == best_key and drop_ids < tuple(ids[p] for p in reversed(best_far)))
        ):
            best_key = key
            best_far = far
        if collect:
            all_far.extend(leaves)

    schedule = None
    if opts.mode is not SearchMode.COUNT_ONLY:
        order = tuple(ids[p] for p in reversed(best_far))
        schedule = total_distance(instance, order)
    q_count = None if opts.mode is SearchMode.OPTIMIZE_ONLY else count
    feasible = None
    if collect:
        feasible = frozenset(tuple(ids[p] for p in reversed(far)) for far in all_far)
    return Solution(
        schedule=schedule,
        method="sequential_search",
        q_count=q_count,
        visited_nodes=nodes,
        feasible_orders=feasible,
    )
