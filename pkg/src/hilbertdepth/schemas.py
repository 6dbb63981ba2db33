"""Pydantic request/response models shared by the HTTP API and the CLI.

Exact integer results are serialized as decimal strings so that JSON
consumers limited to 64-bit numbers never truncate them; small structural
integers (parameters, degrees, depths) stay plain JSON numbers.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

CoeffMethod = Literal["formula", "recurrence", "enumerate", "genfunc", "all"]
DepthMethod = Literal["search", "formula", "both"]
SuiteName = Literal[
    "recurrence", "genfunc", "series", "lemma32", "prop33", "tail", "all"
]

COEFF_ROUTES = ("formula", "recurrence", "enumerate", "genfunc")


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str


class IdealRequest(BaseModel):
    """Base request carrying the parameters (n, d) with n >= d >= 1."""

    n: int = Field(ge=1)
    d: int = Field(ge=1)

    @model_validator(mode="after")
    def _require_n_ge_d(self) -> "IdealRequest":
        if self.d > self.n:
            raise ValueError(f"need n >= d >= 1, got n={self.n}, d={self.d}")
        return self


class SeriesRequest(IdealRequest):
    k_max: Optional[int] = Field(default=None, ge=0, le=10_000)


class ClosedTermPayload(BaseModel):
    coeff: str
    t_power: int
    pole_order: int


class CoefficientWindowPayload(BaseModel):
    start_degree: int
    values: list[str]


class SeriesResponse(BaseModel):
    n: int
    d: int
    closed_form: str
    terms: list[ClosedTermPayload]
    coefficients: Optional[CoefficientWindowPayload] = None


class CoeffRequest(IdealRequest):
    k: int = Field(ge=0, le=10_000)
    method: CoeffMethod = "formula"


class CoeffResponse(BaseModel):
    n: int
    d: int
    k: int
    method: CoeffMethod
    values: dict[str, str]
    agree: bool


class DepthRequest(IdealRequest):
    method: DepthMethod = "both"


class DepthResponse(BaseModel):
    n: int
    d: int
    hdepth: int
    failing_r: Optional[int] = None
    failing_k: Optional[int] = None
    failing_coeff: Optional[str] = None


class TableRequest(BaseModel):
    n_max: int = Field(ge=1)
    d_max: int = Field(ge=1)


class TableRow(BaseModel):
    n: int
    d: int
    hdepth_formula: int
    hdepth_search: int
    agree: bool


class TableResponse(BaseModel):
    rows: list[TableRow]


class VerifyRequest(BaseModel):
    suite: SuiteName = "all"
    n_max: Optional[int] = Field(default=None, ge=1)
    k_max: Optional[int] = Field(default=None, ge=0)
    r_max: Optional[int] = Field(default=None, ge=0)


class CounterexamplePayload(BaseModel):
    identity: str
    n: int
    d: int
    k: Optional[int] = None
    r: Optional[int] = None
    lhs: str
    rhs: str


class SuiteResultPayload(BaseModel):
    suite: str
    checks: int
    failures: int
    passed: bool
    first_counterexample: Optional[CounterexamplePayload] = None


class VerifyResponse(BaseModel):
    passed: bool
    checks: int
    failures: int
    suites: list[SuiteResultPayload]
