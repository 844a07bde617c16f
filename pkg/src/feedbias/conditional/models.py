"""Types for conditional drift estimates."""

import math
from dataclasses import dataclass

from feedbias.core.constants import Direction
from feedbias.core.errors import InvalidArgumentError
from feedbias.stochastic.models import require_positive


@dataclass(frozen=True)
class ConditionalQuery:
    """One evaluation of E[nu_hat | R_T > C] or E[nu_hat | R_T <= C].

    ``C`` is a log-return threshold over the whole horizon ``T``.
    """

    nu: float
    sigma: float
    T: float
    C: float
    direction: Direction = Direction.ABOVE

    def __post_init__(self) -> None:
        if not math.isfinite(self.nu):
            raise InvalidArgumentError(f"nu must be finite, got {self.nu!r}")
        if not math.isfinite(self.C):
            raise InvalidArgumentError(f"C must be finite, got {self.C!r}")
        require_positive("sigma", self.sigma)
        require_positive("T", self.T)
        object.__setattr__(self, "direction", Direction(self.direction))

    @property
    def mills_argument(self) -> float:
        """d = (C - nu T) / (sigma sqrt(T))."""
        return (self.C - self.nu * self.T) / (self.sigma * math.sqrt(self.T))

    @property
    def scale(self) -> float:
        """sigma / sqrt(T), the scale of nu_hat around nu."""
        return self.sigma / math.sqrt(self.T)


@dataclass(frozen=True)
class ConditionalResult:
    """Conditional expectation with its tail probability and bias.

    ``bias`` is ``expectation`` minus the unconditional reference (nu for the
    drift of the log-price, mu for the drift of the price).
    """

    expectation: float
    tail_probability: float
    bias: float
    mills_argument: float


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Mean of R_T / T over simulated totals satisfying the condition."""

    mean: float
    std_error: float
    retained: int
    paths: int

    @property
    def retained_fraction(self) -> float:
        return self.retained / self.paths


@dataclass(frozen=True)
class SurfaceCell:
    """One (mu, C) cell of the bias surface; degenerate cells carry NaN."""

    mu: float
    C: float
    expectation: float
    bias: float
    degenerate: bool = False

    @property
    def flag(self) -> str:
        return "degenerate" if self.degenerate else "ok"


@dataclass(frozen=True)
class ConvergencePoint:
    """Conditional expectation at one horizon next to its T -> infinity limit."""

    T: float
    expectation: float
    limit: float

    @property
    def gap(self) -> float:
        return abs(self.expectation - self.limit)
