"""Per-period estimates and the indicator-gated conditional forecasts."""

import logging
import math
from collections.abc import Sequence

from feedbias.conditional.expectation import conditional_nu
from feedbias.conditional.models import ConditionalQuery
from feedbias.config.models import PipelineConfig
from feedbias.core.constants import Direction
from feedbias.core.errors import DegenerateConditionError, InsufficientDataError
from feedbias.pipeline.benchmark import period_benchmark
from feedbias.pipeline.models import PeriodRecord, StockDataset
from feedbias.stochastic.estimate import estimate_unconditional, log_returns

logger = logging.getLogger(__name__)


def _forward_forecast(nu_hat: float, sigma2_hat: float, T: float, C: float) -> float | None:
    """E[nu_hat | R_T > C] with this period's estimates plugged in; None if degenerate."""
    if sigma2_hat <= 0.0:
        return None
    query = ConditionalQuery(nu=nu_hat, sigma=math.sqrt(sigma2_hat), T=T, C=C, direction=Direction.ABOVE)
    try:
        return conditional_nu(query).expectation
    except DegenerateConditionError:
        return None


def build_period_records(data: StockDataset, config: PipelineConfig | None = None) -> list[PeriodRecord]:
    """One record per period, oldest first.

    Raises:
        InsufficientDataError: If the dataset has fewer than 2 periods.
        DataError: If a period lacks the inputs of its benchmark.
    """
    config = config or PipelineConfig()
    if data.n_periods < 2:
        raise InsufficientDataError(f"stock {data.stock_id}: need at least 2 periods, got {data.n_periods}")

    records: list[PeriodRecord] = []
    pending: float | None = None
    for index, period in enumerate(data.periods):
        estimate = estimate_unconditional(log_returns(period.path))
        realized = log_returns(period.path).total
        C = period_benchmark(data.stock_id, period, config)
        outperformed = realized > C

        invested = pending is not None
        nu_tilde = pending if pending is not None else 0.0
        bias = nu_tilde - estimate.nu_hat if invested else 0.0

        forward = None
        degenerate = False
        if outperformed:
            forward = _forward_forecast(estimate.nu_hat, estimate.sigma2_hat, config.period_length, C)
            if forward is None:
                degenerate = True
                logger.warning(
                    f"stock {data.stock_id} period {period.label}: degenerate conditional expectation, "
                    "next forecast set to 0"
                )

        records.append(
            PeriodRecord(
                period_index=index,
                nu_hat=estimate.nu_hat,
                sigma2_hat=estimate.sigma2_hat,
                realized_return=realized,
                benchmark_c=C,
                outperformed=outperformed,
                invested=invested,
                nu_tilde=nu_tilde,
                bias=bias,
                forward_forecast=forward if forward is not None else 0.0,
                degenerate=degenerate,
            )
        )
        pending = forward

    logger.debug(
        f"stock {data.stock_id}: {sum(r.invested for r in records)}/{len(records)} periods invested"
    )
    return records


def raw_forecasts(records: Sequence[PeriodRecord]) -> list[float]:
    """nu_tilde for every period followed by the forecast of the next one."""
    if not records:
        raise InsufficientDataError("no period records")
    return [records[0].nu_tilde] + [r.forward_forecast for r in records]
