import random
from fractions import Fraction as F

import pytest

from hedgehog.balls import ball, epsilon_net
from hedgehog.errors import NotTotallyBounded, UniverseMismatch
from hedgehog.points import APEX, Point, SpineUniverse, distance
from hedgehog.sets import HedgehogSet, member
from hedgehog.traces import IntervalTrace

CU = SpineUniverse.countable()


def probe_points(universe, spines=(1, 2, 3, 4, 5), denominator=16):
    top = universe.count if universe.is_finite else max(spines)
    pts = [APEX]
    for s in range(1, top + 1):
        pts += [Point(F(k, denominator), s) for k in range(1, denominator + 1)]
    return pts


def test_apex_ball_example():
    got = ball(CU, APEX, F(1, 3))
    assert got == HedgehogSet.make(CU, apex=True, default=IntervalTrace.of((0, F(1, 3), "oo")))


def test_interior_ball_example():
    got = ball(CU, Point(F(1, 2), 4), F(1, 4))
    assert got == HedgehogSet.make(
        CU, exceptions={4: IntervalTrace.of((F(1, 4), F(3, 4), "oo"))}
    )


def test_wide_ball_example():
    got = ball(CU, Point(F(1, 4), 4), F(1, 2))
    expected = HedgehogSet.make(
        CU,
        apex=True,
        default=IntervalTrace.of((0, F(1, 4), "oo")),
        exceptions={4: IntervalTrace.of((0, F(3, 4), "oo"))},
    )
    assert got == expected


def test_ball_requires_valid_center():
    with pytest.raises(UniverseMismatch):
        ball(SpineUniverse.finite(2), Point(F(1, 2), 3), F(1, 4))
    with pytest.raises(ValueError):
        ball(CU, APEX, F(0))


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("kind", ["open", "closed"])
def test_ball_membership_matches_metric(seed, kind):
    rng = random.Random(seed)
    universe = CU if seed % 2 else SpineUniverse.finite(4)
    top = universe.count if universe.is_finite else 5
    if rng.random() < 0.2:
        center = APEX
    else:
        center = Point(F(rng.randint(1, 16), 16), rng.randint(1, top))
    radius = F(rng.randint(1, 24), 16)
    b = ball(universe, center, radius, kind)
    for p in probe_points(universe):
        expected = (
            distance(center, p) < radius
            if kind == "open"
            else distance(center, p) <= radius
        )
        assert member(b, p) == expected, (str(center), radius, str(p))


def test_epsilon_net_counts():
    assert len(epsilon_net(SpineUniverse.finite(2), F(1, 2))) == 7
    assert len(epsilon_net(SpineUniverse.finite(1), F(1))) == 2


def test_epsilon_net_rejects_countable():
    with pytest.raises(NotTotallyBounded):
        epsilon_net(CU, F(1, 2))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("eps", [F(1, 2), F(1, 4)])
def test_epsilon_net_covers_grid(k, eps):
    universe = SpineUniverse.finite(k)
    net = epsilon_net(universe, eps)
    for s in universe.spines():
        for j in range(0, 65):
            p = Point(F(j, 64), s)
            assert any(member(b, p) for b in net), (k, eps, str(p))
