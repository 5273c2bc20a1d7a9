"""Finitely-described subsets of the hedgehog and their topology.

A HedgehogSet stores an apex flag, a default trace applied to every
spine not listed, and a finite exception table spine -> trace.  This
class of sets is a Boolean algebra, and openness/closure questions in
the quotient, metric and compact topologies are decidable on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .errors import (
    NoSubcoverWithinBound,
    NotCompactOpen,
    NotInClosure,
    PreconditionViolated,
    UniverseMismatch,
)
from .points import APEX, Point, SpineUniverse
from .traces import EMPTY_TRACE, FULL_TRACE, IntervalTrace

ZERO = Fraction(0)


class Topology(str, Enum):
    QUOTIENT = "quotient"
    METRIC = "metric"
    COMPACT = "compact"


@dataclass(frozen=True)
class HedgehogSet:
    """apex flag + default trace + finite exception table, canonical form."""

    universe: SpineUniverse
    apex: bool
    default: IntervalTrace
    exceptions: tuple[tuple[int, IntervalTrace], ...]

    @classmethod
    def make(
        cls,
        universe: SpineUniverse,
        apex: bool = False,
        default: IntervalTrace = EMPTY_TRACE,
        exceptions: Optional[Mapping[int, IntervalTrace]] = None,
    ) -> "HedgehogSet":
        exc = dict(exceptions or {})
        for spine in exc:
            universe.require(spine)
        # canonical form must be unique per pointwise content; over finitely
        # many spines the default/exception split is ambiguous, so expand it:
        # empty default, one exception per nonempty spine
        if universe.is_finite:
            exc = {s: exc.get(s, default) for s in universe.spines()}
            default = EMPTY_TRACE
        pruned = {s: t for s, t in exc.items() if t != default}
        return cls(universe, bool(apex), default, tuple(sorted(pruned.items())))

    @classmethod
    def empty(cls, universe: SpineUniverse) -> "HedgehogSet":
        return cls.make(universe)

    @classmethod
    def full(cls, universe: SpineUniverse) -> "HedgehogSet":
        return cls.make(universe, apex=True, default=FULL_TRACE)

    # -- structure -----------------------------------------------------

    def trace(self, spine: int) -> IntervalTrace:
        self.universe.require(spine)
        for s, t in self.exceptions:
            if s == spine:
                return t
        return self.default

    def exception_spines(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.exceptions)

    def default_applies(self) -> bool:
        """Whether at least one spine falls back to the default trace."""
        if self.universe.is_finite:
            return len(self.exceptions) < self.universe.count
        return True

    def applicable_traces(self) -> Iterator[tuple[Optional[int], IntervalTrace]]:
        """Exception traces (with spine) plus the default when it applies (None)."""
        for s, t in self.exceptions:
            yield s, t
        if self.default_applies():
            yield None, self.default

    def spine_scan_limit(self) -> int:
        """Spines 1..limit include every exception plus one default spine."""
        top = max((s for s, _ in self.exceptions), default=0)
        if self.universe.is_finite:
            return self.universe.count
        return top + 1

    @property
    def is_empty(self) -> bool:
        if self.apex:
            return False
        return self.default.is_empty and all(t.is_empty for _, t in self.exceptions)

    def __str__(self) -> str:
        parts = [f"apex={'+' if self.apex else '-'}", f"default={self.default}"]
        parts += [f"{s}:{t}" for s, t in self.exceptions]
        return f"HedgehogSet({self.universe}; " + ", ".join(parts) + ")"


def member(A: HedgehogSet, p: Point) -> bool:
    """Pointwise membership."""
    if p.is_apex:
        return A.apex
    return A.trace(p.spine).contains(p.height)


def _zip_traces(A: HedgehogSet, B: HedgehogSet) -> Iterator[tuple[int, IntervalTrace, IntervalTrace]]:
    spines = sorted({s for s, _ in A.exceptions} | {s for s, _ in B.exceptions})
    for s in spines:
        yield s, A.trace(s), B.trace(s)


def _require_same_universe(A: HedgehogSet, B: HedgehogSet) -> None:
    if A.universe != B.universe:
        raise UniverseMismatch(f"{A.universe} vs {B.universe}")


def union(A: HedgehogSet, B: HedgehogSet) -> HedgehogSet:
    _require_same_universe(A, B)
    exc = {s: ta.union(tb) for s, ta, tb in _zip_traces(A, B)}
    return HedgehogSet.make(A.universe, A.apex or B.apex, A.default.union(B.default), exc)


def intersection(A: HedgehogSet, B: HedgehogSet) -> HedgehogSet:
    _require_same_universe(A, B)
    exc = {s: ta.intersection(tb) for s, ta, tb in _zip_traces(A, B)}
    return HedgehogSet.make(
        A.universe, A.apex and B.apex, A.default.intersection(B.default), exc
    )


def difference(A: HedgehogSet, B: HedgehogSet) -> HedgehogSet:
    _require_same_universe(A, B)
    exc = {s: ta.difference(tb) for s, ta, tb in _zip_traces(A, B)}
    return HedgehogSet.make(
        A.universe, A.apex and not B.apex, A.default.difference(B.default), exc
    )


def complement(A: HedgehogSet) -> HedgehogSet:
    exc = {s: t.complement() for s, t in A.exceptions}
    return HedgehogSet.make(A.universe, not A.apex, A.default.complement(), exc)


def boolean_op(kind: str, A: HedgehogSet, B: HedgehogSet) -> HedgehogSet:
    ops = {"union": union, "intersection": intersection, "difference": difference}
    if kind not in ops:
        raise ValueError(f"unknown boolean operation {kind!r}")
    return ops[kind](A, B)


def is_subset(A: HedgehogSet, B: HedgehogSet) -> bool:
    return difference(A, B).is_empty


@dataclass(frozen=True)
class OpennessVerdict:
    quotient: bool
    metric: bool
    compact: bool

    def for_topology(self, topology: Topology) -> bool:
        return getattr(self, Topology(topology).value)

    def as_dict(self) -> dict:
        return {"quotient": self.quotient, "metric": self.metric, "compact": self.compact}


def classify_open(A: HedgehogSet) -> OpennessVerdict:
    """Openness of A in each of the three topologies.

    Apex neighborhoods differ: the quotient allows one radius per spine,
    the metric needs a single positive radius below all of them, and the
    compact topology only lets finitely many spines miss a full (0,1].
    In a finite universe the three coincide.
    """
    traces = list(A.applicable_traces())
    traces_open = all(t.is_open() for _, t in traces)
    if not traces_open:
        return OpennessVerdict(False, False, False)
    if not A.apex:
        return OpennessVerdict(True, True, True)

    radii = [t.initial_segment_radius() for _, t in traces]
    quotient = all(r > 0 for r in radii)
    metric = quotient and min(radii) > 0
    if A.universe.is_finite:
        compact = quotient
    else:
        compact = quotient and A.default.is_full
    return OpennessVerdict(quotient, metric, compact)


def closure(A: HedgehogSet, topology: Topology) -> HedgehogSet:
    """Smallest closed superset of A within the representable class."""
    topology = Topology(topology)
    exc = {s: t.closure() for s, t in A.exceptions}
    default = A.default.closure() if A.default_applies() else A.default

    apex = A.apex
    if not apex:
        reaches_zero = any(
            not t.is_empty and t.infimum() == ZERO for _, t in A.applicable_traces()
        )
        if topology in (Topology.QUOTIENT, Topology.METRIC):
            apex = reaches_zero
        else:
            infinitely_many_spines = (
                not A.universe.is_finite and not A.default.is_empty
            )
            apex = reaches_zero or infinitely_many_spines
    return HedgehogSet.make(A.universe, apex, default, exc)


def is_closed(A: HedgehogSet, topology: Topology) -> bool:
    return classify_open(complement(A)).for_topology(topology)


# -- convergent-sequence witnesses ------------------------------------


@dataclass(frozen=True)
class SingleSpineSequence:
    """Points target + direction*scale/(k+1) on one spine (constant when scale=0)."""

    spine: int
    target: Fraction
    scale: Fraction
    direction: int

    def point(self, k: int) -> Point:
        if k < 1:
            raise ValueError("sequence indices start at 1")
        height = self.target + self.direction * self.scale * Fraction(1, k + 1)
        return Point(height, self.spine)

    def limit(self) -> Point:
        return Point(self.target, self.spine) if self.target != 0 else APEX

    def describe(self) -> str:
        if self.scale == 0:
            return f"constant ({self.target}, {self.spine})"
        sign = "+" if self.direction > 0 else "-"
        return f"heights {self.target} {sign} {self.scale}/(k+1) on spine {self.spine}"


@dataclass(frozen=True)
class DistinctSpinesSequence:
    """A finite prefix of (spine, height) pairs, then consecutive default spines."""

    prefix: tuple[tuple[int, Fraction], ...]
    tail_start: int
    tail_height: Fraction

    def point(self, k: int) -> Point:
        if k < 1:
            raise ValueError("sequence indices start at 1")
        if k <= len(self.prefix):
            spine, height = self.prefix[k - 1]
            return Point(height, spine)
        return Point(self.tail_height, self.tail_start + (k - 1 - len(self.prefix)))

    def limit(self) -> Point:
        return APEX

    def describe(self) -> str:
        return (
            f"{len(self.prefix)} listed points, then height {self.tail_height} "
            f"on spines {self.tail_start}, {self.tail_start + 1}, ..."
        )


SequenceWitness = Union[SingleSpineSequence, DistinctSpinesSequence]


def _single_spine_to_interior(spine: int, trace: IntervalTrace, t: Fraction) -> SingleSpineSequence:
    if trace.contains(t):
        return SingleSpineSequence(spine, t, ZERO, 0)
    for iv in trace.intervals:
        if iv.lo <= t <= iv.hi:
            if t == iv.lo:
                return SingleSpineSequence(spine, t, iv.hi - t, +1)
            return SingleSpineSequence(spine, t, t - iv.lo, -1)
    raise NotInClosure(f"height {t} is not in the slice closure on spine {spine}")


def fu_witness(A: HedgehogSet, x: Point, topology: Topology) -> SequenceWitness:
    """An explicit sequence of points of A converging to x (Frechet-Urysohn)."""
    topology = Topology(topology)
    if not member(closure(A, topology), x):
        raise NotInClosure(f"{x} is not in the {topology.value} closure")

    if member(A, x):
        return SingleSpineSequence(x.spine, x.height, ZERO, 0)

    if not x.is_apex:
        return _single_spine_to_interior(x.spine, A.trace(x.spine), x.height)

    # approach the apex: least spine whose slice reaches height 0, if any
    for spine in range(1, A.spine_scan_limit() + 1):
        t = A.trace(spine)
        if not t.is_empty and t.infimum() == ZERO:
            return SingleSpineSequence(spine, ZERO, t.intervals[0].hi, +1)

    # compact topology: walk pairwise-distinct nonempty spines
    if topology is Topology.COMPACT and not A.universe.is_finite and not A.default.is_empty:
        top = max((s for s, _ in A.exceptions), default=0)
        prefix = tuple(
            (s, A.trace(s).representative())
            for s in range(1, top + 1)
            if not A.trace(s).is_empty
        )
        return DistinctSpinesSequence(prefix, top + 1, A.default.representative())

    raise NotInClosure("no representable sequence converges to the apex")


def eventually_inside(
    witness: SequenceWitness, A: HedgehogSet, scan: int = 300, run: int = 30
) -> Optional[int]:
    """Least index found by scanning from which `run` consecutive points
    of the sequence stay inside A; None if the scan never sees that."""
    streak = 0
    for k in range(1, scan + run + 1):
        if member(A, witness.point(k)):
            streak += 1
            if streak >= run:
                return k - run + 1
        else:
            streak = 0
    return None


# -- first-countability refutation ------------------------------------


def refute_countable_base(
    universe: SpineUniverse, candidates: Sequence[HedgehogSet]
) -> HedgehogSet:
    """Diagonal neighborhood of the apex refusing every listed candidate.

    Candidate n is halved on spine n, so no candidate fits inside the
    result; with countably many spines this defeats any countable base.
    """
    if universe.is_finite:
        raise PreconditionViolated("the refutation needs a countably infinite universe")
    exceptions: dict[int, IntervalTrace] = {}
    for n, candidate in enumerate(candidates, start=1):
        if candidate.universe != universe:
            raise PreconditionViolated(f"candidate {n} lives in {candidate.universe}")
        if not candidate.apex:
            raise PreconditionViolated(f"candidate {n} does not contain the apex")
        if not classify_open(candidate).quotient:
            raise PreconditionViolated(f"candidate {n} is not quotient-open")
        radius = candidate.trace(n).initial_segment_radius()
        exceptions[n] = IntervalTrace.of((ZERO, radius / 2, "oo"))
    return HedgehogSet.make(universe, apex=True, default=FULL_TRACE, exceptions=exceptions)


# -- compactness: finite subcovers ------------------------------------


@dataclass(frozen=True)
class Subcover:
    indices: tuple[int, ...]
    sets: tuple[HedgehogSet, ...]


def extract_finite_subcover(
    stream: Iterable[HedgehogSet], bound: int
) -> Subcover:
    """Extract a finite subcover from a stream of compact-open sets.

    Scans for an apex neighborhood (its complement is a closed residue on
    finitely many spines), then chains over the remaining elements,
    keeping each one that shrinks the uncovered residue.  Elements seen
    before the apex neighborhood are buffered and replayed.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    chosen: list[tuple[int, HedgehogSet]] = []
    buffered: list[tuple[int, HedgehogSet]] = []
    residual: Optional[HedgehogSet] = None
    universe: Optional[SpineUniverse] = None
    consumed = 0

    def take(idx: int, element: HedgehogSet) -> bool:
        nonlocal residual
        if not intersection(residual, element).is_empty:
            chosen.append((idx, element))
            residual = difference(residual, element)
        return residual.is_empty

    for idx, element in enumerate(stream):
        if consumed >= bound:
            break
        consumed += 1
        if universe is None:
            universe = element.universe
        elif element.universe != universe:
            raise UniverseMismatch("stream elements live in different universes")
        if not classify_open(element).compact:
            raise NotCompactOpen(f"stream element {idx} is not compact-open")

        if residual is None:
            if element.apex:
                chosen.append((idx, element))
                residual = complement(element)
                done = residual.is_empty or any(take(j, b) for j, b in buffered)
                if done or residual.is_empty:
                    break
            else:
                buffered.append((idx, element))
        elif take(idx, element):
            break

    if residual is None or not residual.is_empty:
        raise NoSubcoverWithinBound(
            f"no subcover after {consumed} elements", consumed, residual
        )
    chosen.sort(key=lambda pair: pair[0])
    result = Subcover(tuple(i for i, _ in chosen), tuple(s for _, s in chosen))
    covered = HedgehogSet.empty(universe)
    for s in result.sets:
        covered = union(covered, s)
    if not is_subset(HedgehogSet.full(universe), covered):
        raise RuntimeError("internal invariant breach: chosen sets do not cover")
    return result


# -- exact distance from a point to a set (closure oracle) ------------


def set_distance(p: Point, A: HedgehogSet) -> Optional[Fraction]:
    """Infimum of d(p, a) over a in A, exactly; None when A is empty."""
    candidates: list[Fraction] = []
    if A.apex:
        candidates.append(p.height)  # d(p, apex) = height
    if p.is_apex:
        for _, t in A.applicable_traces():
            if not t.is_empty:
                candidates.append(t.infimum())
        return min(candidates) if candidates else None

    own = A.trace(p.spine).min_distance(p.height)
    if own is not None:
        candidates.append(own)
    other = _min_infimum_other_spines(A, p.spine)
    if other is not None:
        candidates.append(p.height + other)
    return min(candidates) if candidates else None


def _min_infimum_other_spines(A: HedgehogSet, spine: int) -> Optional[Fraction]:
    values: list[Fraction] = []
    for s, t in A.exceptions:
        if s != spine and not t.is_empty:
            values.append(t.infimum())
    if not A.default.is_empty:
        default_spines = (
            A.universe.count - len(A.exceptions) if A.universe.is_finite else None
        )
        spine_is_default = all(s != spine for s, _ in A.exceptions)
        remaining = (
            None
            if default_spines is None
            else default_spines - (1 if spine_is_default else 0)
        )
        if remaining is None or remaining >= 1:
            values.append(A.default.infimum())
    return min(values) if values else None
