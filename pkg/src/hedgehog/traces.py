"""Exact interval algebra on the punctured unit interval (0,1].

An IntervalTrace is the slice of a hedgehog subset along one spine: a
canonical (sorted, disjoint, maximally merged) union of rational
intervals inside (0,1] with per-endpoint open/closed flags.  Height 0 is
never a member; the apex is tracked separately by the set layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .rational import RationalLike, as_fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Interval:
    """One rational interval inside (0,1]; degenerate points allowed."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self) -> None:
        lo = as_fraction(self.lo)
        hi = as_fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not (ZERO <= lo <= hi <= ONE):
            raise ValueError(f"interval [{lo},{hi}] outside [0,1]")
        if lo == hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("a degenerate interval must be closed on both sides")
        if lo == ZERO and self.lo_closed:
            raise ValueError("0 is the apex and never belongs to a trace")

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def min_distance(self, x: Fraction) -> Fraction:
        """Infimum of |x - y| over the interval (the closure distance)."""
        if x < self.lo:
            return self.lo - x
        if x > self.hi:
            return x - self.hi
        return ZERO

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def flags(self) -> str:
        return ("c" if self.lo_closed else "o") + ("c" if self.hi_closed else "o")

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo},{self.hi}{right}"


def interval(lo: RationalLike, hi: RationalLike, flags: str = "oo") -> Interval:
    """Build an interval from "oo|oc|co|cc" endpoint flags."""
    if flags not in ("oo", "oc", "co", "cc"):
        raise ValueError(f"bad endpoint flags {flags!r}")
    return Interval(as_fraction(lo), as_fraction(hi), flags[0] == "c", flags[1] == "c")


def _mergeable(a: Interval, b: Interval) -> bool:
    # assumes a.lo <= b.lo after sorting
    if b.lo < a.hi:
        return True
    if b.lo == a.hi:
        return a.hi_closed or b.lo_closed
    return False


def _merge(a: Interval, b: Interval) -> Interval:
    lo, lo_closed = a.lo, a.lo_closed
    if b.lo == a.lo:
        lo_closed = a.lo_closed or b.lo_closed
    if a.hi > b.hi:
        hi, hi_closed = a.hi, a.hi_closed
    elif a.hi < b.hi:
        hi, hi_closed = b.hi, b.hi_closed
    else:
        hi, hi_closed = a.hi, a.hi_closed or b.hi_closed
    return Interval(lo, hi, lo_closed, hi_closed)


@dataclass(frozen=True)
class IntervalTrace:
    """Canonical finite union of disjoint, non-adjacent intervals in (0,1]."""

    intervals: tuple[Interval, ...]

    @classmethod
    def from_intervals(cls, items: Iterable[Interval]) -> "IntervalTrace":
        pending = sorted(items, key=lambda iv: (iv.lo, not iv.lo_closed, iv.hi))
        merged: list[Interval] = []
        for iv in pending:
            if merged and _mergeable(merged[-1], iv):
                merged[-1] = _merge(merged[-1], iv)
            else:
                merged.append(iv)
        return cls(tuple(merged))

    @classmethod
    def empty(cls) -> "IntervalTrace":
        return cls(())

    @classmethod
    def full(cls) -> "IntervalTrace":
        return cls((Interval(ZERO, ONE, False, True),))

    @classmethod
    def of(cls, *items: tuple) -> "IntervalTrace":
        """Shorthand: IntervalTrace.of((lo, hi, "oo"), ...)."""
        return cls.from_intervals(interval(*item) for item in items)

    # -- queries -------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def is_full(self) -> bool:
        return self == IntervalTrace.full()

    def contains(self, x: RationalLike) -> bool:
        v = as_fraction(x)
        return any(iv.contains(v) for iv in self.intervals)

    def infimum(self) -> Optional[Fraction]:
        """Greatest lower bound of the trace; None when empty."""
        return self.intervals[0].lo if self.intervals else None

    def initial_segment_radius(self) -> Fraction:
        """Largest eps with (0,eps) inside the trace; 0 when there is none."""
        if not self.intervals or self.intervals[0].lo != ZERO:
            return ZERO
        return self.intervals[0].hi

    def min_distance(self, x: Fraction) -> Optional[Fraction]:
        """Infimum distance from x to the trace; None when empty."""
        if not self.intervals:
            return None
        return min(iv.min_distance(x) for iv in self.intervals)

    def representative(self) -> Fraction:
        """A deterministic member of a nonempty trace (first interval)."""
        if not self.intervals:
            raise ValueError("empty trace has no representative")
        first = self.intervals[0]
        if first.is_degenerate:
            return first.lo
        if first.hi_closed:
            return first.hi
        return (first.lo + first.hi) / 2

    def is_open(self) -> bool:
        """Open within (0,1]: a closed endpoint is allowed at 1 only."""
        for iv in self.intervals:
            if iv.lo_closed:
                return False
            if iv.hi_closed and iv.hi != ONE:
                return False
        return True

    # -- algebra -------------------------------------------------------

    def union(self, other: "IntervalTrace") -> "IntervalTrace":
        return IntervalTrace.from_intervals(self.intervals + other.intervals)

    def intersection(self, other: "IntervalTrace") -> "IntervalTrace":
        out: list[Interval] = []
        for a in self.intervals:
            for b in other.intervals:
                lo = max(a.lo, b.lo)
                hi = min(a.hi, b.hi)
                if lo > hi:
                    continue
                lo_closed = a.contains(lo) and b.contains(lo)
                hi_closed = a.contains(hi) and b.contains(hi)
                if lo == hi:
                    if lo_closed:
                        out.append(Interval(lo, hi, True, True))
                    continue
                out.append(Interval(lo, hi, lo_closed, hi_closed))
        return IntervalTrace.from_intervals(out)

    def complement(self) -> "IntervalTrace":
        """Complement within (0,1]."""
        out: list[Interval] = []
        cursor: Fraction = ZERO
        cursor_closed = False  # whether `cursor` itself is still missing from gaps
        for iv in self.intervals:
            if cursor < iv.lo or (cursor == iv.lo and cursor_closed and not iv.lo_closed):
                lo_closed = cursor_closed and cursor != ZERO
                hi_closed = not iv.lo_closed
                if cursor == iv.lo:
                    out.append(Interval(cursor, cursor, True, True))
                else:
                    out.append(Interval(cursor, iv.lo, lo_closed, hi_closed))
            cursor = iv.hi
            cursor_closed = not iv.hi_closed
        if cursor < ONE:
            out.append(Interval(cursor, ONE, cursor_closed and cursor != ZERO, True))
        elif cursor == ONE and cursor_closed:
            out.append(Interval(ONE, ONE, True, True))
        return IntervalTrace.from_intervals(out)

    def difference(self, other: "IntervalTrace") -> "IntervalTrace":
        return self.intersection(other.complement())

    def closure(self) -> "IntervalTrace":
        """1-D closure within (0,1]: close every endpoint except at 0."""
        closed = [
            Interval(iv.lo, iv.hi, iv.lo != ZERO, True) for iv in self.intervals
        ]
        return IntervalTrace.from_intervals(closed)

    def __str__(self) -> str:
        return " u ".join(str(iv) for iv in self.intervals) if self.intervals else "{}"


EMPTY_TRACE = IntervalTrace.empty()
FULL_TRACE = IntervalTrace.full()
