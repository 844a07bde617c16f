"""Adaptive corrections of the raw conditional forecasts.

Forecast lists have one entry per period plus the next period. Period 0 has
no forecast and period 1 has no earlier deviation, so both pass through
unadjusted.
"""

import math
from collections.abc import Sequence

from feedbias.config.models import EsTarget
from feedbias.core.errors import InsufficientDataError
from feedbias.pipeline.models import PeriodRecord
from feedbias.pipeline.records import raw_forecasts
from feedbias.smoothing.models import SmoothingConfig
from feedbias.smoothing.smoother import smooth


def _require_records(records: Sequence[PeriodRecord], minimum: int, operation: str) -> None:
    if len(records) < minimum:
        raise InsufficientDataError(f"{operation} needs at least {minimum} periods, got {len(records)}")


def simple_adjust(records: Sequence[PeriodRecord]) -> list[float]:
    """Subtract the previous period's bias from each raw forecast."""
    _require_records(records, 2, "simple adjustment")
    raw = raw_forecasts(records)
    adjusted = raw[:2]
    for j in range(2, len(raw)):
        adjusted.append(raw[j] - records[j - 1].bias)
    return adjusted


def smoothing_series(records: Sequence[PeriodRecord], target: EsTarget = EsTarget.BIAS) -> list[float]:
    """Series the ES adjustment smooths, starting at period 1.

    BIAS: biases of periods 1..N-1, zeros where nothing was invested.
    FORECAST: raw forecasts of periods 1..N, the last being the next period.
    """
    if target is EsTarget.BIAS:
        return [r.bias for r in records[1:]]
    return raw_forecasts(records)[1:]


def es_adjust(
    records: Sequence[PeriodRecord],
    config: SmoothingConfig | None = None,
    target: EsTarget = EsTarget.BIAS,
) -> list[float]:
    """Correct raw forecasts with exponentially smoothed history.

    BIAS subtracts the smoothed one-step bias forecast, which reduces to
    simple_adjust at alpha = 1. FORECAST replaces each raw forecast with the
    smoothed forecast series up to and including it.
    """
    _require_records(records, 3, "exponential-smoothing adjustment")
    config = config or SmoothingConfig()
    raw = raw_forecasts(records)
    smoothed = smooth(smoothing_series(records, target), config).forecasts

    adjusted = raw[:2]
    for j in range(2, len(raw)):
        if target is EsTarget.BIAS:
            adjusted.append(raw[j] - float(smoothed[j - 1]))
        else:
            adjusted.append(float(smoothed[j]))
    return adjusted


def sum_squared_deviation(forecasts: Sequence[float], records: Sequence[PeriodRecord]) -> float:
    """Sum over invested periods of (forecast - nu_hat)^2."""
    return math.fsum(
        (forecasts[r.period_index] - r.nu_hat) ** 2 for r in records if r.invested
    )
