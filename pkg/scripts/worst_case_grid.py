"""Survey four-airplane reverse-ratio instances for maximal stable-order counts.

Scans a small integer grid of burn rates and range-ratio progressions,
skips instances with an exact phi tie at any adjacent comparison, and
histograms the stable-order count of every surviving instance.  The cap
2^(n-2) = 4 is reached but never exceeded; witnesses are printed.

Usage: python scripts/worst_case_grid.py
"""

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations

from arp import Airplane, Instance, enumerate_sfs_oracle, phi


def decision_tie(instance):
    planes = {a.id: a for a in instance.airplanes}
    for perm in permutations(instance.ids):
        for l in range(instance.n - 1):
            context = Fraction(sum(planes[x].c for x in perm[l + 2 :]))
            if phi(planes[perm[l]], context) == phi(planes[perm[l + 1]], context):
                return True
    return False


def main() -> None:
    histogram = Counter()
    witnesses = []
    for cs in combinations(range(2, 10), 4):
        for s in range(6, 19, 2):
            for t in (1, 2, 3):
                vs = [c * (s + t * i) for i, c in enumerate(cs, start=1)]
                planes = tuple(
                    Airplane(id=i, v=Fraction(v), c=Fraction(c))
                    for i, (v, c) in enumerate(zip(vs, cs), start=1)
                )
                designs = [p.design_ratio for p in planes]
                if not all(x > y for x, y in zip(designs, designs[1:])):
                    continue
                instance = Instance(planes)
                if decision_tie(instance):
                    continue
                q = len(enumerate_sfs_oracle(instance))
                histogram[q] += 1
                if q == 4:
                    witnesses.append((cs, s, t, vs))
    print("stable-order count histogram over the tie-free grid:")
    for q in sorted(histogram):
        print("  q=%d: %d instances" % (q, histogram[q]))
    print("cap witnesses (c, s, t, v):")
    for cs, s, t, vs in witnesses[:10]:
        print("  c=%s s=%d t=%d v=%s" % (cs, s, t, vs))
    if len(witnesses) > 10:
        print("  ... and %d more" % (len(witnesses) - 10))


if __name__ == "__main__":
    main()
