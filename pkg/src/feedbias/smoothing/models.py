"""Types for single exponential smoothing."""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from feedbias.core.errors import InvalidArgumentError
from feedbias.stochastic.models import FloatArray

DEFAULT_ALPHA = 0.2

# 0.05, 0.10, ..., 0.95
DEFAULT_ALPHA_GRID: tuple[float, ...] = tuple(round(0.05 * k, 2) for k in range(1, 20))


class InitPolicy(str, Enum):
    """How the first forecast F_1 is chosen."""

    FIRST_OBSERVATION = "first_observation"
    PROVIDED_VALUE = "provided_value"


@dataclass(frozen=True)
class SmoothingConfig:
    """Smoothing factor and initialisation of F_1.

    ``initial_value`` is required by, and only read under, PROVIDED_VALUE.
    """

    alpha: float = DEFAULT_ALPHA
    init_policy: InitPolicy = InitPolicy.FIRST_OBSERVATION
    initial_value: float | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.alpha) or not 0.0 <= self.alpha <= 1.0:
            raise InvalidArgumentError(f"alpha must lie in [0, 1], got {self.alpha!r}")
        object.__setattr__(self, "init_policy", InitPolicy(self.init_policy))
        if self.init_policy is InitPolicy.PROVIDED_VALUE and self.initial_value is None:
            raise InvalidArgumentError("init_policy provided_value needs an initial_value")

    @classmethod
    def provided(cls, alpha: float, initial_value: float) -> "SmoothingConfig":
        return cls(alpha=alpha, init_policy=InitPolicy.PROVIDED_VALUE, initial_value=initial_value)

    def initial_forecast(self, first_observation: float) -> float:
        if self.init_policy is InitPolicy.PROVIDED_VALUE:
            assert self.initial_value is not None
            return float(self.initial_value)
        return float(first_observation)


@dataclass(frozen=True)
class SmoothedSeries:
    """Observations Y_1..Y_t and forecasts F_1..F_{t+1}."""

    observations: FloatArray
    forecasts: FloatArray
    alpha: float

    @property
    def one_step_forecast(self) -> float:
        """F_{t+1}, the forecast of the next, unseen observation."""
        return float(self.forecasts[-1])

    @property
    def sum_squared_errors(self) -> float:
        """Sum over k = 1..t of (Y_k - F_k)^2."""
        errors = self.observations - self.forecasts[:-1]
        return float(np.dot(errors, errors))


@dataclass(frozen=True)
class AlphaFit:
    """Grid value of alpha with the lowest one-step-ahead SSE."""

    alpha: float
    sse: float
