"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..decomposition import Kind, VariantSpec
from ..grids import SampledSignal, Side, UniformGrid


class GridModel(BaseModel):
    x_min: float
    dx: float = Field(gt=0)
    n: int = Field(ge=2)

    @classmethod
    def from_grid(cls, grid: UniformGrid) -> "GridModel":
        return cls(x_min=grid.x_min, dx=grid.dx, n=grid.n)

    def to_grid(self) -> UniformGrid:
        return UniformGrid(self.x_min, self.dx, self.n)


class SignalModel(BaseModel):
    grid: GridModel
    values: list[float]

    @classmethod
    def from_signal(cls, signal: SampledSignal) -> "SignalModel":
        return cls(grid=GridModel.from_grid(signal.grid), values=signal.values.tolist())

    def to_signal(self) -> SampledSignal:
        return SampledSignal(self.grid.to_grid(), self.values)


SideName = Literal["left", "right"]
KindName = Literal["symmetric", "onesided"]
MethodName = Literal["spectral", "grunwald"]


def to_side(name: SideName) -> Side:
    return Side.LEFT if name == "left" else Side.RIGHT


class ApplyRequest(BaseModel):
    signal: SignalModel
    order: float
    side: SideName = "left"
    method: MethodName = "spectral"


class SignalResponse(BaseModel):
    signal: SignalModel


class VariantModel(BaseModel):
    s: float
    kind: KindName = "symmetric"
    p: float = 1.0
    q: float = 1.0

    def to_variant(self) -> VariantSpec:
        kind = Kind.SYMMETRIC if self.kind == "symmetric" else Kind.ONE_SIDED
        return VariantSpec(self.s, kind, self.p, self.q)


class DecomposeRequest(BaseModel):
    signal: SignalModel
    variant: VariantModel


class DecomposeResponse(BaseModel):
    u: SignalModel
    residual_l2: float
    dc_defect: float
    symbol_min_modulus: float


class ReconstructRequest(BaseModel):
    u: SignalModel
    variant: VariantModel


class NormsRequest(BaseModel):
    signal: SignalModel
    orders: list[float]


class NormsRow(BaseModel):
    mu: float
    seminorm: float
    norm: float


class NormsResponse(BaseModel):
    rows: list[NormsRow]


class DecayRequest(BaseModel):
    signal: SignalModel
    xi_lo: float | None = None
    xi_hi: float | None = None


class DecayResponse(BaseModel):
    exponent: float
    xi_lo: float
    xi_hi: float
    rms_fit_error: float
    superpolynomial: bool


class CorpusEntry(BaseModel):
    name: str
    params: dict[str, float]


class CorpusListResponse(BaseModel):
    entries: list[CorpusEntry]


class CorpusSampleRequest(BaseModel):
    name: str
    x_min: float = -20.0
    x_max: float = 20.0
    n: int = Field(default=4096, ge=2)
    params: dict[str, float] = Field(default_factory=dict)


class VerifyRequest(BaseModel):
    suites: list[str] = Field(default_factory=lambda: ["all"])
    x_min: float = -20.0
    x_max: float = 20.0
    n: int = Field(default=4096, ge=2)
    seed: int = 20180627
    s_values: list[float] | None = None
    tolerances: dict[str, float] = Field(default_factory=dict)
    inject_suite: str | None = None
