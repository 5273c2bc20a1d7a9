"""Seeded generators of random instances used by tests and report checks."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .metricspace import FiniteMetricSpace
from .points import APEX, Point, SpineUniverse
from .sets import HedgehogSet
from .traces import Interval, IntervalTrace

ZERO = Fraction(0)
ONE = Fraction(1)

LABELS = "abcdefghijklmnopqrstuvwxyz"


def random_fraction(rng: random.Random, denominator: int = 64, positive: bool = False) -> Fraction:
    lo = 1 if positive else 0
    return Fraction(rng.randint(lo, denominator), denominator)


def random_point(rng: random.Random, universe: SpineUniverse, denominator: int = 64) -> Point:
    if rng.random() < 0.1:
        return APEX
    height = random_fraction(rng, denominator, positive=True)
    top = universe.count if universe.is_finite else 12
    return Point(height, rng.randint(1, top))


def random_trace(rng: random.Random, denominator: int = 16, max_intervals: int = 3) -> IntervalTrace:
    intervals = []
    for _ in range(rng.randint(0, max_intervals)):
        a = Fraction(rng.randint(0, denominator), denominator)
        b = Fraction(rng.randint(0, denominator), denominator)
        lo, hi = min(a, b), max(a, b)
        if lo == hi:
            if lo == 0:
                continue
            intervals.append(Interval(lo, hi, True, True))
        else:
            intervals.append(
                Interval(lo, hi, rng.random() < 0.5 and lo > 0, rng.random() < 0.5)
            )
    return IntervalTrace.from_intervals(intervals)


def random_set(
    rng: random.Random,
    universe: SpineUniverse,
    denominator: int = 16,
    max_exceptions: int = 3,
) -> HedgehogSet:
    top = universe.count if universe.is_finite else 8
    n_exc = rng.randint(0, min(max_exceptions, top))
    spines = rng.sample(range(1, top + 1), n_exc)
    return HedgehogSet.make(
        universe,
        apex=rng.random() < 0.5,
        default=random_trace(rng, denominator),
        exceptions={s: random_trace(rng, denominator) for s in spines},
    )


def random_open_apex_neighborhood(
    rng: random.Random, universe: SpineUniverse, denominator: int = 16
) -> HedgehogSet:
    """A quotient-open set containing the apex: per-spine initial segments."""

    def segment() -> IntervalTrace:
        radius = Fraction(rng.randint(1, denominator), denominator)
        trace = IntervalTrace.of((ZERO, radius, "oo"))
        if rng.random() < 0.3:
            tail = Fraction(rng.randint(0, denominator - 1), denominator)
            trace = trace.union(IntervalTrace.of((tail, ONE, "oc")))
        return trace

    top = universe.count if universe.is_finite else 6
    spines = rng.sample(range(1, top + 1), rng.randint(0, min(3, top)))
    return HedgehogSet.make(
        universe,
        apex=True,
        default=segment(),
        exceptions={s: segment() for s in spines},
    )


def random_metric_space(
    rng: random.Random,
    size: Optional[int] = None,
    max_size: int = 8,
    denominator: int = 8,
    grid: int = 16,
) -> FiniteMetricSpace:
    """L1 distances between distinct points of a rational grid.

    Grid coordinates keep the least positive distance at 1/denominator or
    above, which bounds the work the refinement algorithms have to do.
    """
    n = size if size is not None else rng.randint(1, max_size)
    points: set[tuple[Fraction, Fraction]] = set()
    while len(points) < n:
        points.add(
            (
                Fraction(rng.randint(0, grid), denominator),
                Fraction(rng.randint(0, grid), denominator),
            )
        )
    coords = sorted(points)
    labels = [LABELS[i] if i < len(LABELS) else f"p{i}" for i in range(n)]
    table = [
        [abs(p[0] - q[0]) + abs(p[1] - q[1]) for q in coords] for p in coords
    ]
    return FiniteMetricSpace.from_table(labels, table)
