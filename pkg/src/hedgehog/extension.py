"""Separation of disjoint families and the hedgehog-valued extension
operator, executed on finite metric spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    EmptyA,
    LengthMismatch,
    NotDisjoint,
    PremiseViolated,
    SpineOutOfUniverse,
)
from .metricspace import (
    FiniteMetricSpace,
    ScalarMap,
    dist_to_set,
    mcshane_extend,
    require_valid,
    subspace,
)
from .points import APEX, Point, SpineUniverse

ZERO = Fraction(0)


def combine_pairwise(
    us: Sequence[Iterable[str]], vs: Sequence[Iterable[str]]
) -> list[frozenset[str]]:
    """W_1 = U_1 and W_n = U_n minus the first n-1 V-complements.

    Given U_n disjoint from V_n for each n, the outputs are pairwise
    disjoint while still containing whatever each U_n was protecting.
    """
    if len(us) != len(vs):
        raise LengthMismatch(f"{len(us)} U-sets vs {len(vs)} V-sets")
    u_sets = [frozenset(u) for u in us]
    v_sets = [frozenset(v) for v in vs]
    for n, (u, v) in enumerate(zip(u_sets, v_sets), start=1):
        if u & v:
            raise PremiseViolated(f"U_{n} meets V_{n} in {sorted(u & v)}")
    out: list[frozenset[str]] = []
    for n, u in enumerate(u_sets):
        w = u
        for v in v_sets[:n]:
            w = w & v
        out.append(w)
    return out


def separation_gap(
    space: FiniteMetricSpace, family: Sequence[Iterable[str]]
) -> Fraction | None:
    """Least distance between points of distinct members; None when fewer
    than two members are nonempty."""
    members = [frozenset(f) for f in family if f]
    gaps = [
        space.d(x, y)
        for i, a in enumerate(members)
        for b in members[i + 1 :]
        for x in a
        for y in b
    ]
    return min(gaps) if gaps else None


def is_discrete_family(
    space: FiniteMetricSpace, family: Sequence[Iterable[str]]
) -> bool:
    """Discreteness of a finite family of (closed) sets: on a finite
    space this is pairwise disjointness, equivalently a positive gap."""
    members = [frozenset(f) for f in family]
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if a & b:
                return False
    gap = separation_gap(space, members)
    return gap is None or gap > 0


def metric_separate(
    space: FiniteMetricSpace, family: Sequence[Iterable[str]]
) -> list[frozenset[str]]:
    """Open separators U_i = { x : d(x, F_i) < d(x, union of the rest) }.

    Strict inequality leaves tied points in no member, which is what
    makes the outputs pairwise disjoint.
    """
    members = [frozenset(f) for f in family]
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if a & b:
                raise NotDisjoint(f"family members share {sorted(a & b)}")
    out = []
    for i, f in enumerate(members):
        rest = frozenset().union(*(m for j, m in enumerate(members) if j != i)) if len(members) > 1 else frozenset()
        out.append(
            frozenset(
                x
                for x in space.labels
                if dist_to_set(space, x, sorted(f)) < dist_to_set(space, x, sorted(rest))
            )
        )
    return out


@dataclass(frozen=True)
class HedgehogMap:
    """A total assignment label -> hedgehog point over a finite metric space."""

    space: FiniteMetricSpace
    assignment: tuple[tuple[str, Point], ...]

    @classmethod
    def of(cls, space: FiniteMetricSpace, mapping: Mapping[str, Point]) -> "HedgehogMap":
        unknown = [k for k in mapping if k not in space._index]
        if unknown:
            raise ValueError(f"labels {unknown} not in the space")
        return cls(space, tuple(sorted(mapping.items())))

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.assignment)

    def get(self, label: str) -> Point:
        for key, value in self.assignment:
            if key == label:
                return value
        raise KeyError(label)

    def as_dict(self) -> dict[str, Point]:
        return dict(self.assignment)


@dataclass(frozen=True)
class ExtensionResult:
    F: HedgehogMap                       # the extension, total on the space
    G: ScalarMap                         # extended height of f
    H: ScalarMap                         # extended height after zeroing off the separators
    U: tuple[tuple[int, frozenset[str]], ...]  # spine -> separator

    def separator(self, spine: int) -> frozenset[str]:
        for s, u in self.U:
            if s == spine:
                return u
        return frozenset()

    def spines(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.U)


def hedgehog_extend(
    space: FiniteMetricSpace,
    domain: Iterable[str],
    f: Mapping[str, Point] | HedgehogMap,
    universe: SpineUniverse,
) -> ExtensionResult:
    """Extend a hedgehog-valued map from a subspace to the whole space.

    Executes the constructive pipeline: extend the height, pull back the
    open spines, separate those preimages inside the positive-height
    region, re-extend the height after zeroing it off the separators, and
    send each separator to its own spine.
    """
    require_valid(space)
    a_labels = [x for x in space.labels if x in set(domain)]
    if not a_labels:
        raise EmptyA("the subspace to extend from is empty")
    mapping = f.as_dict() if isinstance(f, HedgehogMap) else dict(f)
    missing = [x for x in a_labels if x not in mapping]
    if missing:
        raise ValueError(f"map not defined on {missing}")
    for x in a_labels:
        p = mapping[x]
        if not p.is_apex and not universe.admits(p.spine):
            raise SpineOutOfUniverse(f"{p} at {x!r} leaves {universe}")

    heights = ScalarMap.of({x: mapping[x].height for x in a_labels})
    G = mcshane_extend(space, heights)

    fibers: dict[int, set[str]] = {}
    for x in a_labels:
        p = mapping[x]
        if not p.is_apex:
            fibers.setdefault(p.spine, set()).add(x)
    spines = sorted(fibers)

    positive = [x for x in space.labels if G.get(x) > 0]
    if spines:
        separated = metric_separate(subspace(space, positive), [fibers[s] for s in spines])
        separators = {s: u for s, u in zip(spines, separated)}
    else:
        separators = {}

    covered = frozenset().union(*separators.values()) if separators else frozenset()
    h_domain: dict[str, Fraction] = {x: mapping[x].height for x in a_labels}
    for x in space.labels:
        if x not in covered and x not in h_domain:
            h_domain[x] = ZERO
    H = mcshane_extend(space, ScalarMap.of(h_domain))

    assignment: dict[str, Point] = {}
    for x in space.labels:
        spine = next((s for s in spines if x in separators[s]), None)
        assignment[x] = APEX if spine is None else Point(H.get(x), spine)
    return ExtensionResult(
        HedgehogMap.of(space, assignment),
        G,
        H,
        tuple((s, separators[s]) for s in spines),
    )


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    witnesses: tuple


@dataclass(frozen=True)
class ExtensionVerification:
    checks: tuple[IdentityCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_extension(
    space: FiniteMetricSpace,
    result: ExtensionResult,
    domain: Iterable[str],
    f: Mapping[str, Point] | HedgehogMap,
) -> ExtensionVerification:
    """Re-check the extension's defining identities pointwise and exactly."""
    mapping = f.as_dict() if isinstance(f, HedgehogMap) else dict(f)
    a_labels = [x for x in space.labels if x in set(domain)]
    checks: list[IdentityCheck] = []

    bad = tuple(x for x in a_labels if result.F.get(x) != mapping[x])
    checks.append(IdentityCheck("restriction equals f on A", not bad, bad))

    spines = result.spines()
    fiber_spines = sorted(
        {mapping[x].spine for x in a_labels if not mapping[x].is_apex}
    )
    proj_bad = []
    for spine in sorted(set(spines) | set(fiber_spines)):
        sep = result.separator(spine)
        for x in space.labels:
            image = result.F.get(x)
            projected = image.height if image.spine == spine else ZERO
            expected = min(
                Fraction(1 if x in sep else 0), result.H.get(x)
            )
            if projected != expected:
                proj_bad.append((spine, x))
    checks.append(
        IdentityCheck("spine projection equals chi_U wedge H", not proj_bad, tuple(proj_bad))
    )

    overlap = []
    seps = [result.separator(s) for s in spines]
    for i in range(len(seps)):
        for j in range(i + 1, len(seps)):
            if seps[i] & seps[j]:
                overlap.append((spines[i], spines[j]))
    checks.append(IdentityCheck("separators pairwise disjoint", not overlap, tuple(overlap)))

    not_contained = []
    for spine in fiber_spines:
        fiber = {x for x in a_labels if mapping[x].spine == spine and not mapping[x].is_apex}
        if not fiber <= result.separator(spine):
            not_contained.append(spine)
    checks.append(
        IdentityCheck("each fiber inside its separator", not not_contained, tuple(not_contained))
    )
    return ExtensionVerification(tuple(checks))
