"""Builders of small stock datasets for pipeline tests."""

import pytest

from feedbias.pipeline.models import CapmInputs, PeriodData, PeriodRecord, StockDataset
from feedbias.stochastic.models import GbmParams
from feedbias.stochastic.simulate import simulate_gbm


def gbm_dataset(
    nus: list[float],
    sigma: float,
    seed: int,
    steps: int = 252,
    capm: CapmInputs | None = None,
    stock_id: str = "AAA",
) -> StockDataset:
    """One period per drift, each a year of exact GBM anchored at the previous close."""
    price = 100.0
    periods = []
    for index, nu in enumerate(nus):
        path = simulate_gbm(GbmParams.from_log_drift(nu, sigma), a0=price, T=1.0, n=steps, seed=seed * 1000 + index)
        periods.append(PeriodData(label=2010 + index, path=path, capm=capm))
        price = float(path.prices[-1])
    return StockDataset(stock_id=stock_id, periods=tuple(periods))


def make_records(biases: list[float], raw: list[float], nu_hats: list[float] | None = None) -> list[PeriodRecord]:
    """Records with chosen biases and raw forecasts.

    ``raw`` has one entry more than ``biases``: the next-period forecast.
    Period 0 is never invested.
    """
    nu_hats = nu_hats or [0.0] * len(biases)
    records = []
    for index, bias in enumerate(biases):
        invested = index > 0
        records.append(
            PeriodRecord(
                period_index=index,
                nu_hat=nu_hats[index],
                sigma2_hat=0.04,
                realized_return=0.1,
                benchmark_c=0.0,
                outperformed=True,
                invested=invested,
                nu_tilde=raw[index] if invested else 0.0,
                bias=bias if invested else 0.0,
                forward_forecast=raw[index + 1],
            )
        )
    return records


@pytest.fixture
def capm_inputs() -> CapmInputs:
    return CapmInputs(beta=1.0, risk_free=0.02, market_return_expectation=0.05)


@pytest.fixture
def steady_dataset(capm_inputs) -> StockDataset:
    """Five years of a strongly rising stock that beats C = 0.05 every year."""
    return gbm_dataset([0.8] * 5, sigma=0.05, seed=1, capm=capm_inputs)


@pytest.fixture
def dataset_builder():
    return gbm_dataset


@pytest.fixture
def records_builder():
    return make_records
