"""Log-returns and the unconditional estimates of nu and sigma^2."""

import math

import numpy as np

from feedbias.core.errors import InsufficientDataError, InvalidArgumentError
from feedbias.stochastic.models import EstimateResult, PricePath, ReturnSeries


def log_returns(path: PricePath) -> ReturnSeries:
    """Per-step log-returns r_i = ln A_{t_i} - ln A_{t_{i-1}}."""
    log_prices = np.log(path.prices)
    return ReturnSeries(
        returns=np.diff(log_prices),
        step_h=path.step_h,
        total=float(log_prices[-1] - log_prices[0]),
    )


def estimate_unconditional(series: ReturnSeries) -> EstimateResult:
    """Estimate nu and sigma^2 from one return series.

    nu_hat = (z_T - z_0) / T with T = n h, and
    sigma2_hat = sum (r_i - r_bar)^2 / ((n - 1) h).
    """
    if series.n < 2:
        raise InsufficientDataError(f"need at least 2 returns to estimate variance, got {series.n}")

    T = series.horizon
    nu_hat = series.total / T
    sigma2_hat = float(np.var(series.returns, ddof=1)) / series.step_h
    return EstimateResult(nu_hat=nu_hat, sigma2_hat=max(sigma2_hat, 0.0), n=series.n, T=T)


def annualize(value_per_step: float, step_h: float) -> float:
    """Convert a per-step quantity to a per-year one."""
    if not math.isfinite(step_h) or step_h <= 0:
        raise InvalidArgumentError(f"step_h must be > 0, got {step_h!r}")
    return value_per_step / step_h
