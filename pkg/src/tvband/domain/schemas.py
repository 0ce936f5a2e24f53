"""Pydantic schemas for files and reports exchanged with the outside world."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from tvband.domain.types import CheckStatus, IndexKind, PairFamily


class IndexRange(BaseModel):
    model_config = ConfigDict(extra="forbid")

    lo: int
    hi: int


class TruncationDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    family: PairFamily
    bandwidth: float = Field(gt=0)
    half_width: int = Field(ge=0)
    index_kind: IndexKind = "all"


class PairDocument(BaseModel):
    """On-disk bandlimit pair.

    Only ``indices``, ``nodes``, ``weights`` and ``normalized`` are required;
    the remaining fields are written by ``tvband normalize``.
    """

    model_config = ConfigDict(extra="forbid")

    indices: IndexRange
    nodes: list[float]
    weights: list[float]
    normalized: bool = False
    scale: float = 1.0
    admissibility_sum: float | None = None
    truncation_of: TruncationDocument | None = None

    @model_validator(mode="after")
    def _lengths_match(self) -> PairDocument:
        expected = self.indices.hi - self.indices.lo + 1
        if len(self.nodes) != len(self.weights) or len(self.nodes) != expected:
            raise ValueError(
                f"indices [{self.indices.lo}, {self.indices.hi}] need {expected} "
                f"nodes and weights, got {len(self.nodes)} and {len(self.weights)}",
            )
        return self


class Violation(BaseModel):
    """One broken pair invariant."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["monotonicity", "positivity", "finiteness"]
    index: int | None = Field(default=None, description="Spectral index n")
    message: str


class RunConfig(BaseModel):
    """Parameters of a CLI run, loadable from a JSON file."""

    model_config = ConfigDict(extra="forbid")

    pair_path: Path | None = None
    thetas: list[float] = Field(default_factory=lambda: [0.0])
    window: tuple[float, float] | None = None
    grid: tuple[float, float, int] | None = Field(
        default=None,
        description="t0, dt, n",
    )
    mu_w: float | None = Field(default=None, description="Mobius parameter w")
    tol: float = Field(default=1e-9, gt=0)
    alpha: float = 0.0
    output_path: Path | None = None

    @field_validator("thetas")
    @classmethod
    def _thetas_in_unit_interval(cls, value: list[float]) -> list[float]:
        for theta in value:
            if not (0.0 <= theta < 1.0):
                raise ValueError(f"theta must lie in [0, 1), got {theta}")
        return value

    @field_validator("alpha")
    @classmethod
    def _alpha_in_unit_interval(cls, value: float) -> float:
        if not (0.0 <= value < 1.0):
            raise ValueError(f"alpha must lie in [0, 1), got {value}")
        return value

    @field_validator("mu_w")
    @classmethod
    def _mu_inside_disk(cls, value: float | None) -> float | None:
        if value is not None and not abs(value) < 1.0:
            raise ValueError(f"mu-w must satisfy |w| < 1, got {value}")
        return value

    @field_validator("window")
    @classmethod
    def _window_ordered(
        cls,
        value: tuple[float, float] | None,
    ) -> tuple[float, float] | None:
        if value is not None and not value[0] <= value[1]:
            raise ValueError(f"window must satisfy LO <= HI, got {value}")
        return value


class ExceptionalLattice(BaseModel):
    theta: float
    theta_star: float
    finite_points: int


class SequencesSidecar(BaseModel):
    """Companion JSON for ``sequences`` output."""

    theta_star: float
    exceptional: list[ExceptionalLattice] = Field(default_factory=list)


class NyquistReport(BaseModel):
    window: tuple[float, float]
    tv_sample_count: int
    nyquist_count: float
    ratio: float | None
    omega_min: float | None
    omega_max: float | None
    omega_mean: float | None
    w_star: float


class LowpassReport(BaseModel):
    theta: float
    mu_w: float | None
    window: tuple[float, float]
    coefficients: int
    refinements: int
    quadrature_points: int
    tail_estimate: float


class CheckResult(BaseModel):
    name: str
    residual: float
    threshold: float
    status: CheckStatus

    @classmethod
    def of(cls, name: str, residual: float, threshold: float) -> CheckResult:
        ok = math.isfinite(residual) and residual <= threshold
        return cls(
            name=name,
            residual=residual,
            threshold=threshold,
            status="pass" if ok else "fail",
        )


class VerifyReport(BaseModel):
    pair_size: int
    thetas: list[float]
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.status == "pass" for check in self.checks)
