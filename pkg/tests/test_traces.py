from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hedgehog.traces import EMPTY_TRACE, FULL_TRACE, Interval, IntervalTrace, interval


def grid(denominator=16):
    return [F(k, denominator) for k in range(denominator + 1)]


def traces():
    endpoints = st.integers(min_value=0, max_value=16)

    def build(specs):
        out = []
        for a, b, lo_c, hi_c in specs:
            lo, hi = min(a, b), max(a, b)
            lo, hi = F(lo, 16), F(hi, 16)
            if lo == hi:
                if lo > 0:
                    out.append(Interval(lo, hi, True, True))
            else:
                out.append(Interval(lo, hi, lo_c and lo > 0, hi_c))
        return IntervalTrace.from_intervals(out)

    return st.lists(
        st.tuples(endpoints, endpoints, st.booleans(), st.booleans()), max_size=4
    ).map(build)


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(F(0), F(1, 2), True, False)  # 0 never belongs
    with pytest.raises(ValueError):
        Interval(F(1, 2), F(1, 4), False, False)
    with pytest.raises(ValueError):
        Interval(F(1, 2), F(1, 2), False, True)  # degenerate must be closed


def test_merging_is_canonical():
    t = IntervalTrace.of((0, F(1, 2), "oc"), (F(1, 2), 1, "oo"))
    assert t == IntervalTrace.of((0, 1, "oo"))
    gap = IntervalTrace.of((0, F(1, 2), "oo"), (F(1, 2), 1, "oo"))
    assert len(gap.intervals) == 2
    point = IntervalTrace.of((F(1, 2), F(1, 2), "cc"))
    assert gap.union(point) == IntervalTrace.of((0, 1, "oo"))


def test_membership_examples():
    t = IntervalTrace.of((0, 1, "oo"))
    assert t.contains(F(1, 2))
    assert not t.contains(F(1))
    assert not t.contains(F(0))
    assert FULL_TRACE.contains(F(1))


@given(traces(), traces())
def test_union_matches_pointwise(a, b):
    u = a.union(b)
    for x in grid(32):
        assert u.contains(x) == (a.contains(x) or b.contains(x))


@given(traces(), traces())
def test_intersection_matches_pointwise(a, b):
    u = a.intersection(b)
    for x in grid(32):
        assert u.contains(x) == (a.contains(x) and b.contains(x))


@given(traces())
def test_complement_matches_pointwise(a):
    c = a.complement()
    for x in grid(32):
        if x == 0:
            assert not c.contains(x)
        else:
            assert c.contains(x) != a.contains(x)


@given(traces(), traces())
def test_de_morgan(a, b):
    lhs = a.intersection(b)
    rhs = a.complement().union(b.complement()).complement()
    assert lhs == rhs


@given(traces(), traces())
def test_difference_matches_pointwise(a, b):
    d = a.difference(b)
    for x in grid(32):
        assert d.contains(x) == (a.contains(x) and not b.contains(x))


@given(traces())
def test_double_complement(a):
    assert a.complement().complement() == a


def test_initial_segment_radius():
    assert IntervalTrace.of((0, F(1, 3), "oo")).initial_segment_radius() == F(1, 3)
    assert IntervalTrace.of((0, F(1, 3), "oc")).initial_segment_radius() == F(1, 3)
    assert IntervalTrace.of((F(1, 8), F(1, 3), "oo")).initial_segment_radius() == 0
    assert EMPTY_TRACE.initial_segment_radius() == 0


def test_openness():
    assert IntervalTrace.of((0, F(1, 2), "oo")).is_open()
    assert IntervalTrace.of((F(1, 2), 1, "oc")).is_open()
    assert not IntervalTrace.of((F(1, 2), F(3, 4), "oc")).is_open()
    assert not IntervalTrace.of((F(1, 2), F(1, 2), "cc")).is_open()
    assert not IntervalTrace.of((1, 1, "cc")).is_open()  # {1} alone is not open


def test_closure_examples():
    assert IntervalTrace.of((F(1, 2), 1, "oc")).closure() == IntervalTrace.of(
        (F(1, 2), 1, "cc")
    )
    # the 0 end stays open: 0 is not a member of the punctured interval
    assert IntervalTrace.of((0, F(1, 2), "oo")).closure() == IntervalTrace.of(
        (0, F(1, 2), "oc")
    )


@given(traces())
def test_closure_laws(a):
    c = a.closure()
    assert c.closure() == c
    for x in grid(32):
        if a.contains(x):
            assert c.contains(x)


def test_min_distance():
    t = IntervalTrace.of((F(1, 4), F(1, 2), "oo"))
    assert t.min_distance(F(1, 8)) == F(1, 8)
    assert t.min_distance(F(3, 8)) == 0
    assert t.min_distance(F(3, 4)) == F(1, 4)
    assert EMPTY_TRACE.min_distance(F(1, 2)) is None


def test_flags_round_trip():
    iv = interval(F(1, 4), F(1, 2), "oc")
    assert iv.flags() == "oc"
    with pytest.raises(ValueError):
        interval(F(1, 4), F(1, 2), "xx")
