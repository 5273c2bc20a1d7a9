import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hedgehog.points import APEX, Point, SpineUniverse


@pytest.fixture
def rng():
    return random.Random(20240817)


def fractions(denominator: int = 64, low: int = 0, high: int = None):
    high = denominator if high is None else high
    return st.integers(min_value=low, max_value=high).map(
        lambda k: Fraction(k, denominator)
    )


def points(max_spine: int = 6):
    return st.one_of(
        st.just(APEX),
        st.builds(
            Point,
            fractions(low=1),
            st.integers(min_value=1, max_value=max_spine),
        ),
    )


@pytest.fixture
def countable():
    return SpineUniverse.countable()


@pytest.fixture
def finite3():
    return SpineUniverse.finite(3)
