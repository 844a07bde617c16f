"""Synthetic portfolios with a persistent, autocorrelated forecast bias.

Each stock follows GBM with a log drift that, period after period, falls
short of the previous period's level by a margin kappa_i. The margins follow
an AR(1) process around a per-stock mean, so investors who extrapolate last
period's drift are over-optimistic by a bias that persists from one period to
the next.

The CAPM benchmark of each period sits between 0 and 2 volatilities below
that period's drift. Stocks therefore miss the benchmark in some periods,
which leaves the next period uninvested, and the conditional forecast after
a win carries a visible selection premium over the plain drift estimate.
"""

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd
import yaml

from feedbias.core.constants import CSV_FLOAT_FORMAT, TRADING_DAYS_PER_YEAR
from feedbias.core.errors import InvalidArgumentError
from feedbias.core.random import block_rng
from feedbias.pipeline.models import CapmInputs, PeriodData, StockDataset
from feedbias.stochastic.models import GbmParams
from feedbias.stochastic.simulate import simulate_gbm

logger = logging.getLogger(__name__)

BIAS_AR_COEFFICIENT = 0.9
BIAS_INNOVATION_SD = 0.002
# Benchmark distance below the drift, in volatilities.
BENCHMARK_HEADROOM = (0.0, 2.0)
START_YEAR = 2009


@dataclass(frozen=True)
class SyntheticPortfolio:
    """Shape of a generated portfolio.

    ``n_periods`` in-sample years are followed by one holdout year when
    ``holdout`` is set.
    """

    n_stocks: int = 10
    n_periods: int = 10
    steps_per_period: int = TRADING_DAYS_PER_YEAR
    holdout: bool = True
    start_year: int = START_YEAR

    @property
    def total_periods(self) -> int:
        return self.n_periods + (1 if self.holdout else 0)


def bias_margins(rng: np.random.Generator, mean: float, periods: int) -> np.ndarray:
    """AR(1) margins kappa_1..kappa_periods started at their mean."""
    margins = np.empty(periods)
    previous = mean
    for i in range(periods):
        previous = mean + BIAS_AR_COEFFICIENT * (previous - mean) + BIAS_INNOVATION_SD * rng.standard_normal()
        margins[i] = previous
    return margins


def synthetic_drifts(final: float, margins: np.ndarray) -> np.ndarray:
    """Drifts nu_0..nu_{P-1} with nu_{i-1} - nu_i = kappa_i, ending at ``final``."""
    declines = np.append(margins[1:], 0.0)
    return final + np.cumsum(declines[::-1])[::-1]


def synthetic_stock(stock_index: int, seed: int, shape: SyntheticPortfolio) -> StockDataset:
    rng = block_rng(seed, stock_index)
    sigma = rng.uniform(0.015, 0.03)
    beta = rng.uniform(0.8, 1.2)
    margins = bias_margins(rng, rng.uniform(0.08, 0.12), shape.total_periods)
    drifts = synthetic_drifts(rng.uniform(-0.1, 0.0), margins)
    price = rng.uniform(10.0, 100.0)

    periods = []
    for i, nu in enumerate(drifts):
        risk_free = rng.uniform(0.01, 0.02)
        benchmark = nu - rng.uniform(*BENCHMARK_HEADROOM) * sigma
        capm = CapmInputs(
            beta=beta,
            risk_free=risk_free,
            market_return_expectation=risk_free + (benchmark - risk_free) / beta,
        )
        path = simulate_gbm(
            GbmParams.from_log_drift(float(nu), sigma),
            a0=price,
            T=1.0,
            n=shape.steps_per_period,
            seed=int(rng.integers(np.iinfo(np.int64).max)),
        )
        periods.append(PeriodData(label=shape.start_year + i, path=path, capm=capm))
        price = float(path.prices[-1])
    return StockDataset(stock_id=f"S{stock_index + 1:03d}", periods=tuple(periods))


def synthetic_portfolio(seed: int, shape: SyntheticPortfolio | None = None) -> list[StockDataset]:
    """Generate ``shape.n_stocks`` stocks; stock k draws from substream k of ``seed``."""
    shape = shape or SyntheticPortfolio()
    return [synthetic_stock(k, seed, shape) for k in range(shape.n_stocks)]


def _period_dates(year: int, count: int) -> pd.DatetimeIndex:
    return pd.bdate_range(f"{year}-01-01", f"{year}-12-31")[:count]


def write_fixture(directory: Path | str, seed: int, shape: SyntheticPortfolio | None = None) -> dict[str, Path]:
    """Write ``prices.csv``, ``capm.csv`` and ``config.yaml`` for a synthetic portfolio.

    Each year holds the path's closes after its opening anchor.
    """
    shape = shape or SyntheticPortfolio()
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)

    price_rows = []
    capm_rows = []
    for dataset in synthetic_portfolio(seed, shape):
        for period in dataset.periods:
            closes = period.path.prices[1:]
            dates = _period_dates(period.label, closes.size)
            if dates.size < closes.size:
                raise InvalidArgumentError(
                    f"{closes.size} steps do not fit in the business days of {period.label}"
                )
            price_rows.append(
                pd.DataFrame(
                    {"stock_id": dataset.stock_id, "date": dates.strftime("%Y-%m-%d"), "close": closes}
                )
            )
            assert period.capm is not None
            capm_rows.append(
                {
                    "stock_id": dataset.stock_id,
                    "year": period.label,
                    "beta": period.capm.beta,
                    "risk_free": period.capm.risk_free,
                    "market_return_expectation": period.capm.market_return_expectation,
                }
            )

    paths = {"prices": out / "prices.csv", "capm": out / "capm.csv", "config": out / "config.yaml"}
    pd.concat(price_rows, ignore_index=True).to_csv(
        paths["prices"], index=False, float_format="%.10f", lineterminator="\n"
    )
    pd.DataFrame(capm_rows).to_csv(paths["capm"], index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    with open(paths["config"], "w", encoding="utf-8") as f:
        yaml.safe_dump({"alpha": 0.2, "benchmark_mode": "per_period", "holdout": True}, f, sort_keys=True)
    logger.info(f"Wrote synthetic fixture for {shape.n_stocks} stocks to {out}")
    return paths
