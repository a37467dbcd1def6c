"""Pydantic request/response models for the phi3 service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

FamilyName = Literal["braid", "shi", "linial", "semiorder"]
Method = Literal["census", "falk", "kernel", "all"]


class GraphSource(BaseModel):
    """Exactly one input: a gain-graph text, or a named family with its size."""

    graph_text: Optional[str] = None
    family: Optional[FamilyName] = None
    ell: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _one_source(self):
        if (self.graph_text is None) == (self.family is None):
            raise ValueError("provide exactly one of graph_text or family")
        if self.family is not None and self.ell is None:
            raise ValueError("family input requires ell")
        return self


class PhiRequest(GraphSource):
    method: Method = "all"


class PhiResponse(BaseModel):
    n_edges: int
    m_hyperplanes: int
    phi3_census: Optional[int] = None
    phi3_falk: Optional[int] = None
    phi3_kernel: Optional[int] = None
    agreement: Optional[bool] = None


class CensusCounts(BaseModel):
    k3: int
    k4: int
    d2: int
    g_circ: int
    s3: int


class CensusResponse(BaseModel):
    n_edges: int
    m_hyperplanes: int
    counts: CensusCounts
    w2: int
    circuits: list[tuple[int, int, int]]


class DiagResponse(BaseModel):
    n_edges: int
    m_hyperplanes: int
    f3_count: int
    dim_span_f3: int
    dim_i2_3: int


class GenerateRequest(BaseModel):
    family: FamilyName
    ell: int = Field(ge=1)


class GenerateResponse(BaseModel):
    family: FamilyName
    ell: int
    phi3_closed_form: int
    graph_text: str


class VerifyResponse(PhiResponse):
    w2_geometric: int
    w2_formula: int
    dim_i2_3: int
    dim_i2_3_formula: int
    identities_hold: bool


class ViolationInfo(BaseModel):
    kind: str
    edge_ids: list[int]
    message: str
