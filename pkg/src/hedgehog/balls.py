"""Metric balls as exact hedgehog sets, and the finite epsilon-net."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from .errors import NotTotallyBounded
from .points import APEX, Point, SpineUniverse
from .rational import RationalLike, as_fraction
from .sets import HedgehogSet, is_subset, union
from .traces import Interval, IntervalTrace

ZERO = Fraction(0)
ONE = Fraction(1)

BallKind = Literal["open", "closed"]


def _level_interval(lo: Fraction, hi: Fraction, strict: bool) -> IntervalTrace:
    """Heights s in (0,1] with lo <(=) s <(=) hi; empty when nothing qualifies."""
    lo_closed = not strict and lo > ZERO
    if lo < ZERO:
        lo, lo_closed = ZERO, False
    hi_closed = (hi > ONE) or not strict
    hi = min(hi, ONE)
    if hi < lo or (hi == lo and not (lo_closed and hi_closed and lo > ZERO)):
        return IntervalTrace.empty()
    if lo == ZERO:
        lo_closed = False
    return IntervalTrace.from_intervals([Interval(lo, hi, lo_closed, hi_closed)])


def ball(
    universe: SpineUniverse,
    center: Point,
    radius: RationalLike,
    kind: BallKind = "open",
) -> HedgehogSet:
    """Exact sub-level set of the distance to `center`."""
    r = as_fraction(radius)
    if r <= 0:
        raise ValueError("radius must be positive")
    if kind not in ("open", "closed"):
        raise ValueError(f"ball kind must be open or closed, got {kind!r}")
    strict = kind == "open"

    if center.is_apex:
        # every spine sees the same initial segment
        return HedgehogSet.make(
            universe, apex=True, default=_level_interval(ZERO, r, strict)
        )

    universe.require(center.spine)
    t = center.height
    apex_inside = t < r if strict else t <= r
    own = _level_interval(t - r, t + r, strict)
    others = _level_interval(ZERO, r - t, strict)
    return HedgehogSet.make(
        universe, apex=apex_inside, default=others, exceptions={center.spine: own}
    )


def epsilon_net(universe: SpineUniverse, epsilon: RationalLike) -> list[HedgehogSet]:
    """The explicit finite cover by open epsilon-balls (finite universes only)."""
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if not universe.is_finite:
        raise NotTotallyBounded(
            "the countably infinite hedgehog admits no finite epsilon-ball cover"
        )
    balls = [ball(universe, APEX, eps)]
    top = int(2 / eps)  # floor of 2/eps
    for spine in universe.spines():
        for n in range(2, top + 1):
            balls.append(ball(universe, Point(n * eps / 2, spine), eps))

    covered = HedgehogSet.empty(universe)
    for b in balls:
        covered = union(covered, b)
    if not is_subset(HedgehogSet.full(universe), covered):
        raise RuntimeError("internal invariant breach: epsilon-net fails to cover")
    return balls
