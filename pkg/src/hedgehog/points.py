"""Points of the hedgehog J(kappa): metric, projections, order, axes.

A point is a height in [0,1] on a positive-integer spine.  All points of
height 0 are one equivalence class, the apex; it is canonicalized to a
sentinel spine so that equality and hashing need no special cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .errors import EmptyInput, NotDirected, UniverseMismatch
from .rational import RationalLike, as_fraction

APEX_SPINE = 0


@dataclass(frozen=True)
class SpineUniverse:
    """Index set of the spines: Finite(count) or countably infinite (count=None)."""

    count: Optional[int]

    def __post_init__(self) -> None:
        if self.count is not None and self.count < 1:
            raise ValueError("a finite universe needs at least one spine")

    @classmethod
    def finite(cls, count: int) -> "SpineUniverse":
        return cls(count)

    @classmethod
    def countable(cls) -> "SpineUniverse":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.count is not None

    def admits(self, spine: int) -> bool:
        return spine >= 1 and (self.count is None or spine <= self.count)

    def require(self, spine: int) -> None:
        if not self.admits(spine):
            raise UniverseMismatch(f"spine {spine} is not admitted by {self}")

    def spines(self) -> Iterator[int]:
        """All spine indices; only available for finite universes."""
        if self.count is None:
            raise UniverseMismatch("cannot enumerate a countably infinite universe")
        return iter(range(1, self.count + 1))

    def __str__(self) -> str:
        return "J(aleph0)" if self.count is None else f"J({self.count})"


@dataclass(frozen=True)
class Point:
    """A height on a spine; height 0 collapses to the canonical apex."""

    height: Fraction
    spine: int

    def __post_init__(self) -> None:
        h = as_fraction(self.height)
        object.__setattr__(self, "height", h)
        if not 0 <= h <= 1:
            raise ValueError(f"height {h} outside [0,1]")
        if h == 0:
            object.__setattr__(self, "spine", APEX_SPINE)
        elif self.spine < 1:
            raise ValueError(f"spine index must be positive, got {self.spine}")

    @classmethod
    def apex(cls) -> "Point":
        return cls(Fraction(0), APEX_SPINE)

    @property
    def is_apex(self) -> bool:
        return self.height == 0

    def __str__(self) -> str:
        return "0" if self.is_apex else f"({self.height}, {self.spine})"


APEX = Point.apex()


def point(height: RationalLike, spine: int = APEX_SPINE) -> Point:
    """Convenience constructor accepting int/str heights."""
    return Point(as_fraction(height), spine)


def distance(p: Point, q: Point) -> Fraction:
    """Hedgehog metric: |t-s| along one spine, t+s across spines."""
    if p.spine == q.spine:
        return abs(p.height - q.height)
    return p.height + q.height


def project_spine(p: Point, spine: int) -> Fraction:
    """Coordinate of p on the given spine (0 off that spine)."""
    if spine < 1:
        raise ValueError("spine index must be positive")
    return p.height if p.spine == spine else Fraction(0)


def project_height(p: Point) -> Fraction:
    """Height projection; the sum of all spine projections."""
    return p.height


def leq(p: Point, q: Point) -> bool:
    """Partial order: apex below everything, heights compare within one spine."""
    if p.is_apex:
        return True
    return p.spine == q.spine and p.height <= q.height


def infimum(points: Iterable[Point]) -> Point:
    """Greatest lower bound of a nonempty finite set of points."""
    pts = list(points)
    if not pts:
        raise EmptyInput("infimum of an empty set")
    non_apex = [p for p in pts if not p.is_apex]
    if len(non_apex) < len(pts):
        return APEX
    spines = {p.spine for p in non_apex}
    if len(spines) != 1:
        return APEX
    return Point(min(p.height for p in non_apex), spines.pop())


def supremum_directed(points: Iterable[Point]) -> Point:
    """Least upper bound of a nonempty directed set (all on one spine)."""
    pts = list(points)
    if not pts:
        raise EmptyInput("supremum of an empty set")
    non_apex = [p for p in pts if not p.is_apex]
    if not non_apex:
        return APEX
    spines = {p.spine for p in non_apex}
    if len(spines) != 1:
        raise NotDirected(f"points on distinct spines {sorted(spines)} have no common bound")
    return Point(max(p.height for p in non_apex), spines.pop())


@dataclass(frozen=True)
class SparseAxisVector:
    """An element of the axes of the cube: at most one nonzero coordinate."""

    entries: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        if len(self.entries) > 1:
            raise ValueError("axis vectors carry at most one nonzero entry")
        normalized = []
        for spine, value in self.entries:
            v = as_fraction(value)
            if v == 0:
                continue  # zero entries are never stored
            if not 0 < v <= 1:
                raise ValueError(f"entry {v} outside (0,1]")
            if spine < 1:
                raise ValueError("spine index must be positive")
            normalized.append((spine, v))
        object.__setattr__(self, "entries", tuple(normalized))

    @classmethod
    def zero(cls) -> "SparseAxisVector":
        return cls(())

    @classmethod
    def single(cls, spine: int, value: RationalLike) -> "SparseAxisVector":
        return cls(((spine, as_fraction(value)),))

    def get(self, spine: int) -> Fraction:
        for s, v in self.entries:
            if s == spine:
                return v
        return Fraction(0)

    def leq(self, other: "SparseAxisVector") -> bool:
        """Componentwise order inherited from the cube."""
        if not self.entries:
            return True
        spine, value = self.entries[0]
        return other.get(spine) >= value


def to_axes(p: Point) -> SparseAxisVector:
    """Order isomorphism onto the axes of the cube."""
    if p.is_apex:
        return SparseAxisVector.zero()
    return SparseAxisVector.single(p.spine, p.height)


def from_axes(v: SparseAxisVector) -> Point:
    """Inverse of to_axes."""
    if not v.entries:
        return APEX
    spine, value = v.entries[0]
    return Point(value, spine)
