"""Explicit embeddings: the real line into a hedgehog square, the plane
fan map, Stone's sigma-discrete refinement, and the Kowalsky diagonal
embedding of finite metric spaces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    CoverageNotReachedWithinMaxLevel,
    NotACover,
    NotDiscreteFamily,
    NotInImage,
    UnboundedMetric,
)
from .metricspace import FiniteMetricSpace, dist_to_set, require_valid
from .points import APEX, Point
from .rational import RationalLike, as_fraction

ZERO = Fraction(0)
ONE = Fraction(1)


# -- signed spine indices ----------------------------------------------
#
# The real-line embedding indexes spines by integers; the library uses
# positive indices, so signed indices travel through the fixed bijection
# 0, -1, 1, -2, 2, ...  ->  1, 2, 3, 4, 5, ...

def signed_to_spine(z: int) -> int:
    if z == 0:
        return 1
    return 2 * z + 1 if z > 0 else -2 * z


def spine_to_signed(spine: int) -> int:
    if spine < 1:
        raise ValueError("spine index must be positive")
    if spine == 1:
        return 0
    return spine // 2 if spine % 2 == 1 else -(spine // 2)


@dataclass(frozen=True)
class PointPair:
    """An element of the hedgehog square (both coordinates over countably many spines)."""

    first: Point
    second: Point


def _split_even(x: Fraction) -> tuple[int, Fraction]:
    """x = 2k + t with t in (-1, 1]."""
    k = math.ceil((x - 1) / 2)
    return k, x - 2 * k


def _split_odd(x: Fraction) -> tuple[int, Fraction]:
    """x = (2l + 1) + s with s in (-1, 1]."""
    l = math.ceil((x - 2) / 2)
    return l, x - 2 * l - 1


def embed_real(x: RationalLike) -> PointPair:
    """The closed embedding of the real line into the hedgehog square."""
    v = as_fraction(x)
    k, t = _split_even(v)
    l, s = _split_odd(v)
    # height 0 collapses to the apex inside the Point constructor
    return PointPair(
        Point(1 - abs(t), signed_to_spine(k)),
        Point(1 - abs(s), signed_to_spine(l)),
    )


def real_image_member(pair: PointPair) -> bool:
    """Exact characterization of the embedding's image."""
    first, second = pair.first, pair.second
    if first.is_apex:
        return second.height == 1
    n = spine_to_signed(first.spine)
    t = first.height
    return any(second == Point(1 - t, signed_to_spine(m)) for m in (n, n - 1))


def invert_real(pair: PointPair) -> Fraction:
    """The unique x with embed_real(x) = pair; raises when pair is off-image."""
    if not real_image_member(pair):
        raise NotInImage(f"({pair.first}, {pair.second}) is not in the embedded line")
    first, second = pair.first, pair.second
    if first.is_apex:
        m = spine_to_signed(second.spine)
        return Fraction(2 * m + 1)
    n = spine_to_signed(first.spine)
    t = first.height
    if second == Point(1 - t, signed_to_spine(n)):
        return 2 * n + 1 - t
    return 2 * n + t - 1


def fan_map(height: RationalLike, label: RationalLike) -> tuple[Fraction, Fraction]:
    """Send a point with rational spine label into the plane fan."""
    t = as_fraction(height)
    if not ZERO <= t <= ONE:
        raise ValueError(f"height {t} outside [0,1]")
    if t == 0:
        return (ZERO, ZERO)
    s = as_fraction(label)
    scale = t / (1 + s * s)
    return (scale, scale * s)


# -- Stone's sigma-discrete refinement ---------------------------------


@dataclass(frozen=True)
class StoneMember:
    cover_index: int
    points: frozenset[str]
    centers: tuple[str, ...]


@dataclass(frozen=True)
class StoneLevel:
    level: int
    radius: Fraction
    members: tuple[StoneMember, ...]


@dataclass(frozen=True)
class RefinementFamily:
    levels: tuple[StoneLevel, ...]

    def all_points(self) -> frozenset[str]:
        out: set[str] = set()
        for level in self.levels:
            for m in level.members:
                out |= m.points
        return frozenset(out)


def _open_ball(space: FiniteMetricSpace, center: str, radius: Fraction) -> frozenset[str]:
    return frozenset(y for y in space.labels if space.d(center, y) < radius)


def default_max_level(space: FiniteMetricSpace) -> int:
    """Smallest n with 3/2^n at or below the least positive distance, plus one."""
    delta = space.min_positive_distance() or ONE
    n = 1
    while Fraction(3, 2**n) > delta:
        n += 1
    return n + 1


def stone_refine(
    space: FiniteMetricSpace,
    cover: Sequence[Sequence[str]],
    max_level: Optional[int] = None,
) -> RefinementFamily:
    """Sigma-discrete open refinement of the cover, level by level.

    Level n consists of the sets V(i,n): unions of balls of radius 1/2^n
    around the centers c for which i is the least cover index containing
    c, c escaped every earlier level, and the 3/2^n-ball around c fits in
    the i-th cover element.  The list order of the cover is the
    well-ordering.
    """
    require_valid(space)
    label_set = set(space.labels)
    cover_sets = [frozenset(u) for u in cover]
    for u in cover_sets:
        if not u <= label_set:
            raise NotACover(f"cover element {sorted(u)} uses unknown labels")
    covered_union = set().union(*cover_sets) if cover_sets else set()
    if covered_union != label_set:
        raise NotACover("the union of the cover is not the whole space")

    if max_level is None:
        max_level = default_max_level(space)

    covered: set[str] = set()
    levels: list[StoneLevel] = []
    for n in range(1, max_level + 1):
        radius = Fraction(1, 2**n)
        reach = Fraction(3, 2**n)
        members: list[StoneMember] = []
        new_points: set[str] = set()
        for i, u in enumerate(cover_sets):
            centers = []
            for c in space.labels:
                if c in covered or c not in u:
                    continue
                least = next(j for j, w in enumerate(cover_sets) if c in w)
                if least != i:
                    continue
                if _open_ball(space, c, reach) <= u:
                    centers.append(c)
            if centers:
                points = frozenset().union(*(_open_ball(space, c, radius) for c in centers))
                members.append(StoneMember(i, points, tuple(centers)))
                new_points |= points
        levels.append(StoneLevel(n, radius, tuple(members)))
        covered |= new_points
        if covered == label_set:
            return RefinementFamily(tuple(levels))
    raise CoverageNotReachedWithinMaxLevel(
        f"still uncovered after level {max_level}", residue=sorted(label_set - covered)
    )


# -- sigma-discrete basis ----------------------------------------------


@dataclass(frozen=True)
class DiscreteFamily:
    """Pairwise-separated point sets; gap is the guaranteed cross distance."""

    members: tuple[frozenset[str], ...]
    gap: Fraction
    source: str = ""


@dataclass(frozen=True)
class BasisCheck:
    passed: bool
    failures: tuple[tuple[str, int], ...]  # (ball center, denominator n)


@dataclass(frozen=True)
class BasisResult:
    families: tuple[DiscreteFamily, ...]
    resolution: int
    check: BasisCheck


def sufficient_resolution(space: FiniteMetricSpace) -> int:
    """Resolution at which the 1/n-balls are singletons, so the basis
    check below is guaranteed to succeed."""
    delta = space.min_positive_distance()
    if delta is None:
        return 1
    return max(1, math.ceil(1 / delta))


def sigma_discrete_basis(
    space: FiniteMetricSpace, resolution: Optional[int] = None
) -> BasisResult:
    """Stone-refine every 1/n-ball cover, n = 1..resolution, and verify
    that each such ball is a union of the produced members."""
    require_valid(space)
    if resolution is None:
        resolution = sufficient_resolution(space)
    if resolution < 1:
        raise ValueError("resolution must be positive")

    families: list[DiscreteFamily] = []
    for n in range(1, resolution + 1):
        cover = [sorted(_open_ball(space, x, Fraction(1, n))) for x in space.labels]
        refinement = stone_refine(space, cover)
        for level in refinement.levels:
            if level.members:
                families.append(
                    DiscreteFamily(
                        members=tuple(m.points for m in level.members),
                        gap=level.radius,
                        source=f"cover 1/{n}, level {level.level}",
                    )
                )

    failures: list[tuple[str, int]] = []
    all_members = [m for fam in families for m in fam.members]
    for n in range(1, resolution + 1):
        for x in space.labels:
            target = _open_ball(space, x, Fraction(1, n))
            rebuilt = frozenset().union(
                *(m for m in all_members if m <= target)
            ) if any(m <= target for m in all_members) else frozenset()
            if rebuilt != target:
                failures.append((x, n))
    return BasisResult(
        tuple(families), resolution, BasisCheck(not failures, tuple(failures))
    )


# -- Kowalsky's diagonal embedding -------------------------------------


@dataclass(frozen=True)
class EmbeddingLevel:
    family: DiscreteFamily
    spines: tuple[int, ...]  # one spine per member, from the shared pool


@dataclass(frozen=True)
class KowalskyEmbedding:
    levels: tuple[EmbeddingLevel, ...]
    images: tuple[tuple[str, tuple[Point, ...]], ...]

    def image(self, label: str) -> tuple[Point, ...]:
        for key, value in self.images:
            if key == label:
                return value
        raise KeyError(label)


def _check_discrete(space: FiniteMetricSpace, family: DiscreteFamily) -> None:
    members = family.members
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if a & b:
                raise NotDiscreteFamily("members of one level overlap")
            cross = min(space.d(x, y) for x in a for y in b) if a and b else None
            if cross is not None and cross <= family.gap:
                raise NotDiscreteFamily(
                    f"cross distance {cross} within the level gap {family.gap}"
                )


def kowalsky_embed(
    space: FiniteMetricSpace,
    families: Union[BasisResult, Sequence[DiscreteFamily]],
) -> KowalskyEmbedding:
    """Per level, send x to (distance to the member's complement, member spine);
    points off every member of a level go to the apex."""
    require_valid(space)
    if any(v > ONE for row in space.table for v in row):
        raise UnboundedMetric("apply bound_metric before embedding")
    fams = families.families if isinstance(families, BasisResult) else tuple(families)

    levels: list[EmbeddingLevel] = []
    spine = 0
    for fam in fams:
        _check_discrete(space, fam)
        spines = []
        for _ in fam.members:
            spine += 1
            spines.append(spine)
        levels.append(EmbeddingLevel(fam, tuple(spines)))

    images = []
    label_set = set(space.labels)
    for x in space.labels:
        coords: list[Point] = []
        for level in levels:
            hit = [
                (s, m)
                for s, m in zip(level.spines, level.family.members)
                if x in m
            ]
            if not hit:
                coords.append(APEX)
            else:
                s, m = hit[0]
                coords.append(Point(dist_to_set(space, x, sorted(label_set - m)), s))
        images.append((x, tuple(coords)))
    return KowalskyEmbedding(tuple(levels), tuple(images))


@dataclass(frozen=True)
class SeparationReport:
    separates_points: bool
    separates_points_and_closed_sets: bool
    witness_failures: tuple[tuple, ...]


def _hedgehog_distance(p: Point, q: Point) -> Fraction:
    if p.spine == q.spine:
        return abs(p.height - q.height)
    return p.height + q.height


def check_separation(
    embedding: KowalskyEmbedding,
    space: FiniteMetricSpace,
    subset_samples: Optional[int] = None,
    seed: int = 0,
) -> SeparationReport:
    """Check the separation hypotheses of the diagonal embedding.

    Separating points: all image tuples distinct.  Separating points and
    closed sets: for each x and each subset F avoiding x (every subset of
    a finite space is closed), some level keeps F_n(x) at positive
    distance from F_n(F).  Subsets are exhaustive unless subset_samples
    caps them (then a seeded sample is drawn).
    """
    labels = space.labels
    images = {label: embedding.image(label) for label in labels}
    failures: list[tuple] = []

    seen: dict[tuple[Point, ...], str] = {}
    separates_points = True
    for label in labels:
        if images[label] in seen:
            separates_points = False
            failures.append(("points", seen[images[label]], label))
        else:
            seen[images[label]] = label

    n_levels = len(embedding.levels)

    # a level where x sits in a singleton member separates x from anything,
    # so try it first and only fall back to the full scan when it misses
    preferred: dict[str, int] = {}
    for idx, level in enumerate(embedding.levels):
        for m in level.family.members:
            if len(m) == 1:
                preferred.setdefault(next(iter(m)), idx)

    def separated_at(x: str, subset: frozenset[str], idx: int) -> bool:
        px = images[x][idx]
        return all(_hedgehog_distance(px, images[y][idx]) > 0 for y in subset)

    def separated(x: str, subset: frozenset[str]) -> bool:
        if x in preferred and separated_at(x, subset, preferred[x]):
            return True
        return any(separated_at(x, subset, idx) for idx in range(n_levels))

    if subset_samples is None:
        subsets = [
            frozenset(
                label for b, label in enumerate(labels) if mask & (1 << b)
            )
            for mask in range(1, 2 ** len(labels))
        ]
    else:
        import random

        rng = random.Random(seed)
        subsets = []
        for _ in range(subset_samples):
            chosen = frozenset(l for l in labels if rng.random() < 0.5)
            if chosen:
                subsets.append(chosen)

    separates_closed = True
    for subset in subsets:
        for x in labels:
            if x in subset:
                continue
            if not separated(x, subset):
                separates_closed = False
                failures.append(("closed", x, tuple(sorted(subset))))
    return SeparationReport(separates_points, separates_closed, tuple(failures))
