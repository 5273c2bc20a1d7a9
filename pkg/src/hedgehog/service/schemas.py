"""Pydantic request/response models for the service endpoints.

These mirror the JSON wire formats; rationals stay "num/den" strings and
are only converted to exact Fractions inside the handlers.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

Rational = str
TraceJSON = list[tuple[Rational, Rational, Literal["oo", "oc", "co", "cc"]]]
UniverseJSON = Union[int, Literal["inf"]]


class PointModel(BaseModel):
    apex: bool = False
    height: Optional[Rational] = None
    spine: Optional[int] = None

    @model_validator(mode="after")
    def _apex_or_coordinates(self):
        if not self.apex and (self.height is None or self.spine is None):
            raise ValueError("a point is either {'apex': true} or height+spine")
        return self


class HedgehogSetModel(BaseModel):
    universe: UniverseJSON
    apex: bool = False
    default: TraceJSON = Field(default_factory=list)
    exceptions: dict[str, TraceJSON] = Field(default_factory=dict)


class ClassifyResponse(BaseModel):
    quotient: bool
    metric: bool
    compact: bool


class ClosureRequest(BaseModel):
    set: HedgehogSetModel
    topology: Literal["quotient", "metric", "compact"]


class BallRequest(BaseModel):
    universe: UniverseJSON
    center: PointModel
    radius: Rational
    kind: Literal["open", "closed"] = "open"


class EmbedRealRequest(BaseModel):
    x: Rational


class PointPairModel(BaseModel):
    first: PointModel
    second: PointModel


class InvertRealResponse(BaseModel):
    x: Rational


class FanRequest(BaseModel):
    height: Rational
    label: Rational


class FanResponse(BaseModel):
    x: Rational
    y: Rational


class MetricSpaceModel(BaseModel):
    labels: list[str]
    dist: list[list[Rational]]


class CoverModel(BaseModel):
    sets: list[list[str]]


class StoneRequest(BaseModel):
    space: MetricSpaceModel
    cover: CoverModel
    max_level: Optional[int] = None


class BasisRequest(BaseModel):
    space: MetricSpaceModel
    resolution: Optional[int] = None


class KowalskyRequest(BaseModel):
    space: MetricSpaceModel
    resolution: Optional[int] = None
    subset_samples: Optional[int] = None


class ExtendRequest(BaseModel):
    space: MetricSpaceModel
    domain: list[str]
    map: dict[str, PointModel]
    universe: UniverseJSON


class SubcoverRequest(BaseModel):
    stream: list[HedgehogSetModel]
    bound: int = 100


class SubcoverResponse(BaseModel):
    indices: list[int]
    sets: list[HedgehogSetModel]


class ReportRequest(BaseModel):
    kappas: list[int] = Field(default_factory=lambda: [1, 3])
    seed: int = 0
    self_test_fail: bool = False


class ReportCellModel(BaseModel):
    property: str
    topology: str
    regime: str
    verdict: str
    evidence: str
    passed: Optional[bool]


class ErrorDetail(BaseModel):
    error: str
    message: str
