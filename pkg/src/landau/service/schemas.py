"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class BoundEntry(BaseModel):
    source: str
    bound_G: int
    bound_N: int
    strict: bool


class BoundsResponse(BaseModel):
    index: int
    noncentral: int
    bounds: list[BoundEntry]
    part_caps: list[int]


class SolveRequest(BaseModel):
    index: int = Field(ge=1)
    parts: int = Field(ge=1)


class SolveResponse(BaseModel):
    index: int
    parts: int
    solutions: list[list[int]]


class CandidatesResponse(BaseModel):
    mode: Literal["one-class", "two-coprime"]
    index: int
    candidates: list[dict]


class ClassifyRequest(BaseModel):
    mode: Literal["one-class", "two-coprime"]
    index: int = Field(ge=1)
    catalog_text: str
    exhaustive: bool = False


class ClassificationRowModel(BaseModel):
    index: int
    group_order: int
    catalog_id: int
    group_label: str
    subgroup_order: int
    subgroup_label: str
    subgroup_generators: str
    central_part_order: int
    class_sizes: list[int]
    graph_shape: str
    verifications: list[tuple[str, bool]]


class ClassifyResponse(BaseModel):
    mode: str
    index: int
    group_count: int
    rows: list[ClassificationRowModel]


class KppRequest(BaseModel):
    max_k: int = Field(ge=1)
    catalog_text: str
    exhaustive: bool = False


class KppRowModel(BaseModel):
    k: int
    group_order: int
    catalog_id: int
    group_label: str


class KppResponse(BaseModel):
    max_k: int
    rows: list[KppRowModel]


class VerifyRequest(BaseModel):
    catalog_text: str


class VerifyResponse(BaseModel):
    entries_checked: int
    violations: list[str]


class HealthResponse(BaseModel):
    status: Literal["ok"]
    version: Optional[str] = None
