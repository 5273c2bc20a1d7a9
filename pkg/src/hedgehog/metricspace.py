"""Finite metric spaces with exact rational distances, plus utilities:
distance-to-set, bounding, truncated product metric, and the Lipschitz
(McShane) extension used as the Tietze surrogate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .errors import EmptyDomain, InvalidMetric, LengthMismatch, UnboundedMetric
from .rational import RationalLike, as_fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class FiniteMetricSpace:
    """Labeled points with a square rational distance table.

    The constructor checks shape only; validate_metric decides whether
    the table actually satisfies the metric axioms.
    """

    labels: tuple[str, ...]
    table: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels")
        if not labels:
            raise ValueError("a metric space needs at least one point")
        rows = tuple(tuple(as_fraction(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", rows)
        if len(rows) != len(labels) or any(len(row) != len(labels) for row in rows):
            raise ValueError("distance table must be square and match the labels")

    @classmethod
    def from_table(
        cls, labels: Sequence[str], table: Sequence[Sequence[RationalLike]]
    ) -> "FiniteMetricSpace":
        return cls(tuple(labels), tuple(tuple(as_fraction(v) for v in row) for row in table))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def size(self) -> int:
        return len(self.labels)

    def d(self, a: str, b: str) -> Fraction:
        return self.table[self._index[a]][self._index[b]]

    def min_positive_distance(self) -> Optional[Fraction]:
        values = [v for row in self.table for v in row if v > 0]
        return min(values) if values else None


class MetricVerdict(NamedTuple):
    valid: bool
    violation: Optional[tuple]  # (kind, labels...) for the first failure


def validate_metric(space: FiniteMetricSpace) -> MetricVerdict:
    """Check the metric axioms exactly; report the first violation found."""
    labels = space.labels
    for a in labels:
        if space.d(a, a) != 0:
            return MetricVerdict(False, ("identity", a))
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            if space.d(a, b) != space.d(b, a):
                return MetricVerdict(False, ("symmetry", a, b))
            if space.d(a, b) <= 0:
                return MetricVerdict(False, ("positivity", a, b))
    for a in labels:
        for b in labels:
            for c in labels:
                if space.d(a, c) > space.d(a, b) + space.d(b, c):
                    return MetricVerdict(False, ("triangle", a, b, c))
    return MetricVerdict(True, None)


def require_valid(space: FiniteMetricSpace) -> None:
    verdict = validate_metric(space)
    if not verdict.valid:
        raise InvalidMetric(f"metric axioms fail: {verdict.violation}")


def dist_to_set(space: FiniteMetricSpace, x: str, subset: Iterable[str]) -> Fraction:
    """min over a in subset of d(x, a); by convention 1 for the empty set."""
    values = [space.d(x, a) for a in subset]
    return min(values) if values else ONE


def bound_metric(space: FiniteMetricSpace) -> FiniteMetricSpace:
    """Entrywise min{1, d}; induces the same topology."""
    return FiniteMetricSpace(
        space.labels, tuple(tuple(min(ONE, v) for v in row) for row in space.table)
    )


def subspace(space: FiniteMetricSpace, labels: Iterable[str]) -> FiniteMetricSpace:
    keep = [label for label in space.labels if label in set(labels)]
    return FiniteMetricSpace(
        tuple(keep), tuple(tuple(space.d(a, b) for b in keep) for a in keep)
    )


class ProductDistance(NamedTuple):
    value: Fraction
    tail_bound: Fraction  # 1/2^N, the truncation error of the infinite sum


def product_distance(
    xs: Sequence[str],
    ys: Sequence[str],
    metrics: Sequence[FiniteMetricSpace],
) -> ProductDistance:
    """Truncated product metric: sum of d_n(x_n, y_n)/2^n for n = 1..N."""
    if not (len(xs) == len(ys) == len(metrics)):
        raise LengthMismatch(
            f"lengths differ: {len(xs)} points, {len(ys)} points, {len(metrics)} metrics"
        )
    total = ZERO
    for n, (x, y, m) in enumerate(zip(xs, ys, metrics), start=1):
        if any(v > ONE for row in m.table for v in row):
            raise UnboundedMetric(f"level {n} metric is not bounded by 1")
        total += m.d(x, y) / Fraction(2**n)
    return ProductDistance(total, Fraction(1, 2 ** len(metrics)) if metrics else ONE)


@dataclass(frozen=True)
class ScalarMap:
    """A [0,1]-valued assignment on a subset of the labels."""

    values: tuple[tuple[str, Fraction], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, RationalLike]) -> "ScalarMap":
        items = []
        for label, value in mapping.items():
            v = as_fraction(value)
            if not ZERO <= v <= ONE:
                raise ValueError(f"value {v} at {label!r} outside [0,1]")
            items.append((label, v))
        return cls(tuple(sorted(items)))

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.values)

    def get(self, label: str) -> Fraction:
        for key, value in self.values:
            if key == label:
                return value
        raise KeyError(label)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.values)


def mcshane_extend(space: FiniteMetricSpace, f: ScalarMap) -> ScalarMap:
    """Extend f to all labels, preserving its Lipschitz constant.

    F(x) = clip [0,1] of min over a in dom(f) of f(a) + L d(x, a), with L
    the least constant making f Lipschitz on its domain.  F agrees with f
    on the domain exactly.
    """
    dom = f.domain
    if not dom:
        raise EmptyDomain("nothing to extend")
    missing = [a for a in dom if a not in space._index]
    if missing:
        raise ValueError(f"domain labels {missing} not in the space")

    lipschitz = ZERO
    for i, a in enumerate(dom):
        for b in dom[i + 1 :]:
            gap = abs(f.get(a) - f.get(b))
            d = space.d(a, b)
            if d == 0:
                if gap != 0:
                    raise InvalidMetric(f"{a} and {b} coincide but carry different values")
                continue
            lipschitz = max(lipschitz, gap / d)

    out = {}
    for x in space.labels:
        value = min(f.get(a) + lipschitz * space.d(x, a) for a in dom)
        out[x] = min(ONE, max(ZERO, value))
    return ScalarMap.of(out)
