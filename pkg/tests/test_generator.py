"""Deterministic instance generators and the benchmark family."""

import decimal
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arp import (
    AssumptionError,
    AssumptionParams,
    GeneratorParams,
    InstanceClass,
    SplitMix64,
    benchmark_family,
    classify,
    crossing_point,
    delta,
    estimate_m,
    random_crossing,
    random_general,
    random_subset,
)


def test_splitmix_reference_vector():
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


@given(seed=st.integers(0, 2**64 - 1), lo=st.integers(-50, 50), width=st.integers(0, 100))
def test_splitmix_randint_bounds(seed, lo, width):
    rng = SplitMix64(seed)
    for _ in range(5):
        x = rng.randint(lo, lo + width)
        assert lo <= x <= lo + width


def test_splitmix_streams_are_reproducible():
    a = [SplitMix64(123).next_u64() for _ in range(4)]
    b = [SplitMix64(123).next_u64() for _ in range(4)]
    assert a == b
    assert SplitMix64(124).next_u64() != a[0]


def test_benchmark_family_frozen_rows():
    fam = benchmark_family(1000)
    rows = {a.id: a for a in fam.airplanes}
    expected = {
        1: (Fraction(4), 2),
        200: (Fraction(442), 201),
        400: (Fraction(4809, 5), 401),
        600: (Fraction(7808, 5), 601),
        800: (Fraction(11207, 5), 801),
        1000: (Fraction(3001), 1001),
    }
    for label, (v, c) in expected.items():
        assert rows[label].v == v
        assert rows[label].c == c


def test_benchmark_family_rounding_matches_decimal_half_up():
    fam = benchmark_family(1000)
    for a in fam.airplanes:
        raw = a.c * (a.c + 2000) / 1001
        q = decimal.Decimal(raw.numerator) / decimal.Decimal(raw.denominator)
        want = q.quantize(decimal.Decimal("0.1"), rounding=decimal.ROUND_HALF_UP)
        assert a.v == Fraction(str(want))


def test_benchmark_family_unrounded_values_and_crossings():
    fam = benchmark_family(1000, rounded=False)
    planes = fam.airplanes
    for a in planes[::97]:
        assert a.v == a.c * (a.c + 2000) / 1001
    for i, j in [(0, 999), (0, 499), (498, 499), (100, 700)]:
        assert crossing_point(planes[i], planes[j]) == 2000


def test_benchmark_family_tail_gap():
    fam = benchmark_family(1000)
    gap = delta(fam.airplane(999), fam.airplane(1000))
    assert gap == Fraction(1003, 1001000)
    assert gap > Fraction(1, 1000)


def test_benchmark_family_classification():
    assert classify(benchmark_family(1000)) == (InstanceClass.MIXED, True)
    assert classify(benchmark_family(1000, rounded=False)) == (
        InstanceClass.CROSSING,
        False,
    )


def test_benchmark_family_bounds():
    with pytest.raises(ValueError):
        benchmark_family(1)
    with pytest.raises(ValueError):
        benchmark_family(1001)
    assert benchmark_family(2).n == 2


def test_random_crossing_is_reproducible_and_crossing():
    params = GeneratorParams(n=9, seed=42, c_target=Fraction(9))
    a = random_crossing(params)
    b = random_crossing(params)
    assert a == b
    assert random_crossing(GeneratorParams(n=9, seed=43, c_target=Fraction(9))) != a
    assert classify(a) == (InstanceClass.CROSSING, False)


def test_random_crossing_respects_assumptions():
    assumptions = AssumptionParams()
    for seed in range(8):
        inst = random_crossing(GeneratorParams(n=12, seed=seed))
        planes = inst.airplanes
        ratios = [p.range_ratio for p in planes]
        assert all(y - x >= assumptions.min_ratio_gap for x, y in zip(ratios, ratios[1:]))
        assert all(p.c <= assumptions.max_rate for p in planes)
        assert all(r <= assumptions.max_ratio for r in ratios)
        designs = [p.design_ratio for p in planes]
        assert all(x > y for x, y in zip(designs, designs[1:]))


def test_random_crossing_pushes_crossings_past_target():
    for seed in (0, 7, 19):
        params = GeneratorParams(n=8, seed=seed, c_target=Fraction(25))
        inst = random_crossing(params)
        last = inst.airplanes[-1]
        for other in inst.airplanes[:-1]:
            assert crossing_point(other, last) >= params.c_target


def test_random_crossing_infeasible_caps_raise():
    with pytest.raises(AssumptionError):
        random_crossing(
            GeneratorParams(
                n=5,
                seed=1,
                assumptions=AssumptionParams(min_ratio_gap=Fraction(1, 5)),
            )
        )
    with pytest.raises(AssumptionError):
        random_crossing(
            GeneratorParams(
                n=60, seed=1, assumptions=AssumptionParams(max_rate=Fraction(6))
            )
        )
    with pytest.raises(AssumptionError):
        random_crossing(
            GeneratorParams(n=5, seed=1, assumptions=AssumptionParams(max_ratio=Fraction(3)))
        )


def test_generator_params_validation():
    with pytest.raises(ValueError):
        GeneratorParams(n=1, seed=0)
    with pytest.raises(ValueError):
        GeneratorParams(n=5, seed=0, c_target=Fraction(1, 2))
    with pytest.raises(ValueError):
        GeneratorParams(n=5, seed=0, c_target=Fraction(1, 3))


def test_random_general_reproducible_and_distinct():
    a = random_general(10, seed=5)
    assert a == random_general(10, seed=5)
    assert a != random_general(10, seed=6)
    pairs = {(p.v, p.c) for p in a.airplanes}
    assert len(pairs) == 10
    assert a.ids == tuple(range(1, 11))
    assert random_general(1, seed=0).n == 1


def test_random_subset_preserves_source_labels():
    fam = benchmark_family(100)
    sub = random_subset(fam, 10, seed=3)
    assert sub.n == 10
    assert set(sub.ids) <= set(fam.ids)
    for a in sub.airplanes:
        src = fam.airplane(a.id)
        assert (a.v, a.c) == (src.v, src.c)
    designs = [a.design_ratio for a in sub.airplanes]
    assert designs == sorted(designs, reverse=True)
    assert sub == random_subset(fam, 10, seed=3)
    assert sub != random_subset(fam, 10, seed=4)


def test_random_subset_full_size_is_identity_on_sorted_source():
    fam = benchmark_family(50)
    assert random_subset(fam, 50, seed=1).airplanes == fam.airplanes


def test_random_subset_bounds():
    fam = benchmark_family(10)
    with pytest.raises(ValueError):
        random_subset(fam, 0, seed=1)
    with pytest.raises(ValueError):
        random_subset(fam, 11, seed=1)


def test_random_subset_keeps_crossing_class():
    src = random_crossing(GeneratorParams(n=12, seed=8, c_target=Fraction(12)))
    sub = random_subset(src, 6, seed=2)
    assert classify(sub) == (InstanceClass.CROSSING, False)


def test_random_subset_benchmark_estimate():
    sub = random_subset(benchmark_family(1000), 500, seed=9)
    assert estimate_m(sub).m == 42
