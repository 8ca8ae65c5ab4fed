"""Request and response models for the HTTP surface.

These mirror the JSON wire formats of `tempograph.serialize`; conversion
helpers bridge to the library dataclasses so route handlers stay thin.
"""
from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from ..graphs import StaticGraph, TemporalGraph
from ..reachability import ReachabilityGraph
from ..serialize import (closure_from_obj, closure_to_obj, static_from_obj,
                         temporal_from_obj, temporal_to_obj)


class EdgeModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    u: int
    v: int
    labels: list[int]


class TemporalGraphModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    names: list[str] | None = None
    edges: list[EdgeModel]

    @classmethod
    def wrap(cls, g: TemporalGraph) -> "TemporalGraphModel":
        return cls.model_validate(temporal_to_obj(g))

    def unwrap(self) -> TemporalGraph:
        return temporal_from_obj(self.model_dump(exclude_none=True))


class StaticEdgeModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    u: int
    v: int


class StaticGraphModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    directed: bool = False
    edges: list[StaticEdgeModel]

    def unwrap(self) -> StaticGraph:
        return static_from_obj(self.model_dump())


class ClosureModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    arcs: list[tuple[int, int]]

    @classmethod
    def wrap(cls, r: ReachabilityGraph) -> "ClosureModel":
        return cls.model_validate(closure_to_obj(r))

    def unwrap(self) -> ReachabilityGraph:
        return closure_from_obj(self.model_dump())


class CheckResponse(BaseModel):
    n: int
    contacts: int
    proper: bool
    simple: bool
    happy: bool
    tc_strict: bool
    tc_nonstrict: bool


class ClosureRequest(BaseModel):
    graph: TemporalGraphModel
    strictness: str
    dot: bool = False


class ClosureResponse(BaseModel):
    closure: ClosureModel
    dot: str | None = None


class TransformRequest(BaseModel):
    graph: TemporalGraphModel
    method: str = "fan"


class TransformResponse(BaseModel):
    transform: str
    graph: TemporalGraphModel
    sigma: list[int]
    stats: dict


class SpannerRequest(BaseModel):
    graph: TemporalGraphModel
    strictness: str
    mode: str
    guard: int | None = None


class SpannerResponse(BaseModel):
    size: int
    witness: TemporalGraphModel


class ComponentRequest(BaseModel):
    graph: TemporalGraphModel
    strictness: str
    mode: str
    guard: int | None = None


class ComponentResponse(BaseModel):
    size: int
    vertices: list[int]


class ReduceRequest(BaseModel):
    graph: StaticGraphModel
    method: str = "fan"


class ReduceResponse(BaseModel):
    graph: TemporalGraphModel
    originals: list[int]
    auxiliaries: list[int]
    input_edges: int


class RealizeRequest(BaseModel):
    target: ClosureModel
    setting: str


class RealizeResponse(BaseModel):
    witness: TemporalGraphModel | None
    scanned: int


class SeparationCertificate(BaseModel):
    case: str
    setting: str
    target: ClosureModel
    scanned: int
    witness: TemporalGraphModel | None


class FixtureResponse(BaseModel):
    name: str
    description: str
    graph: TemporalGraphModel
    closures: dict[str, ClosureModel]
