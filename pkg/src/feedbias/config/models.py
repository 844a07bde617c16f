"""Configuration models for the portfolio pipeline."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from feedbias.core.constants import TRADING_DAYS_PER_YEAR
from feedbias.smoothing.models import DEFAULT_ALPHA, DEFAULT_ALPHA_GRID


class BenchmarkMode(str, Enum):
    """Where the performance threshold C comes from."""

    PER_PERIOD = "per_period"
    CONSTANT = "constant"


class EsTarget(str, Enum):
    """Series the exponential-smoothing adjustment smooths."""

    BIAS = "bias"
    FORECAST = "forecast"


class PipelineConfig(BaseModel):
    """Settings of one pipeline run."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    alpha: float = Field(default=DEFAULT_ALPHA, ge=0.0, le=1.0, description="Smoothing factor when not fitted")
    fit_alpha: bool = Field(default=False, description="Pick alpha per stock by minimum one-step SSE")
    alpha_grid: tuple[float, ...] = Field(
        default=DEFAULT_ALPHA_GRID, min_length=1, description="Candidates searched when fit_alpha is on"
    )
    h_per_year: int = Field(default=TRADING_DAYS_PER_YEAR, gt=0, description="Sampling steps per year")
    period_length: float = Field(default=1.0, gt=0.0, description="Length T of one period in years")
    benchmark_mode: BenchmarkMode = Field(default=BenchmarkMode.PER_PERIOD, description="Source of C")
    constant_c: float | None = Field(default=None, description="Benchmark used in constant mode")
    es_target: EsTarget = Field(default=EsTarget.BIAS, description="Series the ES adjustment smooths")
    holdout: bool = Field(default=True, description="Treat each stock's last year as the holdout period")
    diagnostic_lags: int = Field(default=3, ge=1, description="Largest lag of the per-stock bias diagnostics")

    @field_validator("alpha_grid")
    @classmethod
    def _grid_in_unit_interval(cls, grid: tuple[float, ...]) -> tuple[float, ...]:
        if any(not 0.0 <= a <= 1.0 for a in grid):
            raise ValueError("alpha_grid values must lie in [0, 1]")
        return grid

    @model_validator(mode="after")
    def _constant_mode_needs_c(self) -> "PipelineConfig":
        if self.benchmark_mode is BenchmarkMode.CONSTANT and self.constant_c is None:
            raise ValueError("benchmark_mode 'constant' requires constant_c")
        return self

    @property
    def step_h(self) -> float:
        return 1.0 / self.h_per_year
