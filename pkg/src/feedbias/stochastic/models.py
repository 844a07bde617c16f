"""Domain types of the geometric Brownian motion model.

All types are frozen; array fields are stored read-only so instances can be
shared across threads.
"""

import math
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from feedbias.core.errors import InsufficientDataError, InvalidArgumentError

FloatArray = npt.NDArray[np.float64]


def _frozen_array(values: npt.ArrayLike) -> FloatArray:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


def require_positive(name: str, value: float) -> None:
    """Raise InvalidArgumentError unless ``value`` is finite and > 0."""
    if not math.isfinite(value) or value <= 0:
        raise InvalidArgumentError(f"{name} must be a positive finite number, got {value!r}")


@dataclass(frozen=True)
class GbmParams:
    """Drift and volatility of dA_t = mu A_t dt + sigma A_t dW_t.

    ``mu`` is stored; the log-price drift ``nu = mu - sigma**2 / 2`` is derived.
    Units are per year.
    """

    mu: float
    sigma: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.mu):
            raise InvalidArgumentError(f"mu must be finite, got {self.mu!r}")
        require_positive("sigma", self.sigma)

    @property
    def nu(self) -> float:
        return self.mu - self.sigma**2 / 2

    @classmethod
    def from_log_drift(cls, nu: float, sigma: float) -> "GbmParams":
        """Build params from the log-price drift nu."""
        return cls(mu=nu + sigma**2 / 2, sigma=sigma)


@dataclass(frozen=True)
class PricePath:
    """Prices sampled on the uniform grid t0, t0 + h, ..., t0 + n h."""

    prices: FloatArray
    step_h: float
    t0: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "prices", _frozen_array(self.prices))
        require_positive("step_h", self.step_h)
        if self.prices.ndim != 1 or self.prices.size < 2:
            raise InsufficientDataError("a price path needs at least 2 prices")
        if not np.all(np.isfinite(self.prices)) or np.any(self.prices <= 0):
            raise InvalidArgumentError("prices must be strictly positive and finite")

    @property
    def n_steps(self) -> int:
        return int(self.prices.size - 1)

    @property
    def horizon(self) -> float:
        """Total time T = n h covered by the path."""
        return self.n_steps * self.step_h


@dataclass(frozen=True)
class ReturnSeries:
    """Per-step log-returns r_1..r_n and the total return over the path.

    ``total`` is kept as z_T - z_0 so it stays exact when z_0 != 0.
    """

    returns: FloatArray
    step_h: float
    total: float = field(default=float("nan"))

    def __post_init__(self) -> None:
        object.__setattr__(self, "returns", _frozen_array(self.returns))
        require_positive("step_h", self.step_h)
        if math.isnan(self.total):
            object.__setattr__(self, "total", float(np.sum(self.returns)))

    @property
    def n(self) -> int:
        return int(self.returns.size)

    @property
    def horizon(self) -> float:
        return self.n * self.step_h


@dataclass(frozen=True)
class EstimateResult:
    """Unconditional estimates of nu and sigma^2 from one return series."""

    nu_hat: float
    sigma2_hat: float
    n: int
    T: float

    @property
    def sigma_hat(self) -> float:
        return math.sqrt(self.sigma2_hat)

    @property
    def mu_hat(self) -> float:
        return self.nu_hat + self.sigma2_hat / 2
