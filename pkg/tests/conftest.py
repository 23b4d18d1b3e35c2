"""Shared builders and hypothesis strategies for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from arp import Airplane, Instance


def plane(i, v, c):
    return Airplane(id=i, v=Fraction(v), c=Fraction(c))


def inst(*pairs):
    """Instance from (v, c) pairs, ids assigned 1..k in order."""
    return Instance(tuple(plane(i + 1, v, c) for i, (v, c) in enumerate(pairs)))


def pair_aligned():
    """v/c^2 and v/c both favour the same airplane; optimum (1, 2)."""
    return inst((4, 2), (12, 3))


def pair_reverse():
    """v/c^2 favours A_1 while v/c favours A_2; optimum (2, 1)."""
    return inst((4, 2), (7, 3))


def triple():
    """Three-airplane reverse-order instance; optimum (2, 3, 1) with total 379/70."""
    return inst((4, 2), (7, 3), (19, 5))


def quad_max_count():
    """Four-airplane reverse-order instance whose stable-order count hits 2^(n-2) = 4."""
    return inst((26, 2), (48, 3), (76, 4), (110, 5))


# decimal-grid rationals keep serialization round-trips exact
tenths_v = st.integers(1, 50000).map(lambda k: Fraction(k, 10))
tenths_c = st.integers(1, 3000).map(lambda k: Fraction(k, 10))


@st.composite
def instances(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = draw(
        st.lists(st.tuples(tenths_v, tenths_c), min_size=n, max_size=n, unique=True)
    )
    return inst(*pairs)


@st.composite
def permutations_of(draw, n):
    order = list(range(1, n + 1))
    return tuple(draw(st.permutations(order)))
