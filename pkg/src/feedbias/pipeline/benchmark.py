"""Performance threshold C from the capital asset pricing model."""

from feedbias.config.models import BenchmarkMode, PipelineConfig
from feedbias.core.errors import DataError
from feedbias.pipeline.models import CapmInputs, PeriodData


def capm_benchmark(risk_free: float, beta: float, market_return_expectation: float) -> float:
    """C = r_f + beta (E(r_M) - r_f)."""
    return risk_free + beta * (market_return_expectation - risk_free)


def period_benchmark(stock_id: str, period: PeriodData, config: PipelineConfig) -> float:
    """Threshold on the period's total log-return.

    The annual rate is scaled by the period length.
    """
    if config.benchmark_mode is BenchmarkMode.CONSTANT:
        assert config.constant_c is not None
        rate = config.constant_c
    else:
        capm: CapmInputs | None = period.capm
        if capm is None:
            raise DataError(f"stock {stock_id}: no CAPM inputs for period {period.label}")
        rate = capm_benchmark(capm.risk_free, capm.beta, capm.market_return_expectation)
    return rate * config.period_length
