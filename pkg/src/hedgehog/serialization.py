"""JSON codecs for every wire format.

Rationals travel as exact "num/den" strings; no floating point anywhere.
Decoders raise ValueError on malformed documents so the CLI/service can
distinguish bad input (exit 1 / HTTP 422) from domain errors (exit 2 /
HTTP 400).
"""

from __future__ import annotations

from typing import Any, Mapping

from .embeddings import (
    BasisResult,
    DiscreteFamily,
    KowalskyEmbedding,
    PointPair,
    RefinementFamily,
    SeparationReport,
)
from .extension import ExtensionResult, ExtensionVerification, HedgehogMap
from .metricspace import FiniteMetricSpace, ScalarMap
from .points import APEX, Point, SpineUniverse
from .rational import format_fraction, parse_fraction
from .sets import HedgehogSet
from .traces import Interval, IntervalTrace, interval


# -- universe -----------------------------------------------------------

def encode_universe(universe: SpineUniverse) -> Any:
    return "inf" if not universe.is_finite else universe.count


def decode_universe(data: Any) -> SpineUniverse:
    if data == "inf":
        return SpineUniverse.countable()
    if isinstance(data, int) and not isinstance(data, bool) and data >= 1:
        return SpineUniverse.finite(data)
    raise ValueError(f'universe must be "inf" or a positive integer, got {data!r}')


# -- points -------------------------------------------------------------

def encode_point(p: Point) -> dict:
    if p.is_apex:
        return {"apex": True}
    return {"height": format_fraction(p.height), "spine": p.spine}


def decode_point(data: Any) -> Point:
    if not isinstance(data, Mapping):
        raise ValueError(f"point must be an object, got {data!r}")
    if data.get("apex"):
        return APEX
    if "height" not in data or "spine" not in data:
        raise ValueError(f"point needs height and spine: {data!r}")
    spine = data["spine"]
    if not isinstance(spine, int) or isinstance(spine, bool):
        raise ValueError(f"spine must be an integer, got {spine!r}")
    try:
        return Point(parse_fraction(data["height"]), spine)
    except ValueError as exc:
        raise ValueError(f"bad point {data!r}: {exc}") from exc


# -- traces and sets ----------------------------------------------------

def encode_trace(trace: IntervalTrace) -> list:
    return [
        [format_fraction(iv.lo), format_fraction(iv.hi), iv.flags()]
        for iv in trace.intervals
    ]


def decode_trace(data: Any) -> IntervalTrace:
    if not isinstance(data, list):
        raise ValueError(f"trace must be a list of [lo, hi, flags]: {data!r}")
    items = []
    for entry in data:
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise ValueError(f"trace entry must be [lo, hi, flags]: {entry!r}")
        lo, hi, flags = entry
        try:
            items.append(interval(parse_fraction(lo), parse_fraction(hi), flags))
        except ValueError as exc:
            raise ValueError(f"bad interval {entry!r}: {exc}") from exc
    return IntervalTrace.from_intervals(items)


def encode_set(A: HedgehogSet) -> dict:
    return {
        "universe": encode_universe(A.universe),
        "apex": A.apex,
        "default": encode_trace(A.default),
        "exceptions": {str(s): encode_trace(t) for s, t in A.exceptions},
    }


def decode_set(data: Any) -> HedgehogSet:
    if not isinstance(data, Mapping):
        raise ValueError(f"set must be an object, got {data!r}")
    universe = decode_universe(data.get("universe"))
    exceptions = {}
    for key, value in (data.get("exceptions") or {}).items():
        try:
            spine = int(key)
        except (TypeError, ValueError):
            raise ValueError(f"exception spine {key!r} is not an integer") from None
        exceptions[spine] = decode_trace(value)
    return HedgehogSet.make(
        universe,
        apex=bool(data.get("apex", False)),
        default=decode_trace(data.get("default", [])),
        exceptions=exceptions,
    )


# -- metric spaces ------------------------------------------------------

def encode_space(space: FiniteMetricSpace) -> dict:
    return {
        "labels": list(space.labels),
        "dist": [[format_fraction(v) for v in row] for row in space.table],
    }


def decode_space(data: Any) -> FiniteMetricSpace:
    if not isinstance(data, Mapping) or "labels" not in data or "dist" not in data:
        raise ValueError("metric space needs labels and dist")
    labels = data["labels"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ValueError("labels must be a list of strings")
    table = data["dist"]
    if not isinstance(table, list):
        raise ValueError("dist must be a list of rows")
    rows = []
    for row in table:
        if not isinstance(row, list):
            raise ValueError("dist rows must be lists")
        rows.append([parse_fraction(v) for v in row])
    try:
        return FiniteMetricSpace.from_table(labels, rows)
    except ValueError as exc:
        raise ValueError(str(exc)) from exc


def encode_scalar_map(f: ScalarMap) -> dict:
    return {label: format_fraction(v) for label, v in f.values}


def decode_scalar_map(data: Any) -> ScalarMap:
    if not isinstance(data, Mapping):
        raise ValueError("scalar map must be an object label -> rational")
    return ScalarMap.of({k: parse_fraction(v) for k, v in data.items()})


# -- embeddings ---------------------------------------------------------

def encode_pair(pair: PointPair) -> dict:
    return {"first": encode_point(pair.first), "second": encode_point(pair.second)}


def decode_pair(data: Any) -> PointPair:
    if not isinstance(data, Mapping) or "first" not in data or "second" not in data:
        raise ValueError("point pair needs first and second")
    return PointPair(decode_point(data["first"]), decode_point(data["second"]))


def encode_refinement(ref: RefinementFamily) -> dict:
    return {
        "levels": [
            {
                "level": lv.level,
                "radius": format_fraction(lv.radius),
                "members": [
                    {
                        "cover_index": m.cover_index,
                        "points": sorted(m.points),
                        "centers": list(m.centers),
                    }
                    for m in lv.members
                ],
            }
            for lv in ref.levels
        ]
    }


def encode_basis(result: BasisResult) -> dict:
    return {
        "resolution": result.resolution,
        "families": [
            {
                "gap": format_fraction(f.gap),
                "source": f.source,
                "members": [sorted(m) for m in f.members],
            }
            for f in result.families
        ],
        "basis_check": {
            "passed": result.check.passed,
            "failures": [[x, n] for x, n in result.check.failures],
        },
    }


def decode_families(data: Any) -> list[DiscreteFamily]:
    if not isinstance(data, list):
        raise ValueError("families must be a list")
    out = []
    for fam in data:
        if not isinstance(fam, Mapping) or "members" not in fam:
            raise ValueError("each family needs members")
        out.append(
            DiscreteFamily(
                members=tuple(frozenset(m) for m in fam["members"]),
                gap=parse_fraction(fam.get("gap", "0/1")),
                source=str(fam.get("source", "")),
            )
        )
    return out


def encode_embedding(emb: KowalskyEmbedding) -> dict:
    return {
        "levels": len(emb.levels),
        "map": {
            label: [encode_point(p) for p in coords] for label, coords in emb.images
        },
    }


def encode_separation(report: SeparationReport) -> dict:
    return {
        "separates_points": report.separates_points,
        "separates_points_and_closed_sets": report.separates_points_and_closed_sets,
        "witness_failures": [list(map(str, w)) for w in report.witness_failures],
    }


# -- extension ----------------------------------------------------------

def encode_hedgehog_map(f: HedgehogMap) -> dict:
    return {
        "space": encode_space(f.space),
        "map": {label: encode_point(p) for label, p in f.assignment},
    }


def encode_extension(result: ExtensionResult) -> dict:
    return {
        "F": {label: encode_point(p) for label, p in result.F.assignment},
        "G": encode_scalar_map(result.G),
        "H": encode_scalar_map(result.H),
        "U": {str(s): sorted(u) for s, u in result.U},
    }


def encode_verification(v: ExtensionVerification) -> dict:
    return {
        "all_passed": v.all_passed,
        "checks": [
            {"name": c.name, "passed": c.passed, "witnesses": [str(w) for w in c.witnesses]}
            for c in v.checks
        ],
    }
