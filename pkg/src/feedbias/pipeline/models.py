"""Domain types of the portfolio forecasting pipeline."""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from feedbias.core.errors import DataError, InsufficientDataError
from feedbias.diagnostics.models import AcfResult, LjungBoxResult
from feedbias.stochastic.models import PricePath


@dataclass(frozen=True)
class CapmInputs:
    """Per-year inputs of the CAPM benchmark; rates are per year."""

    beta: float
    risk_free: float
    market_return_expectation: float

    def __post_init__(self) -> None:
        for name in ("beta", "risk_free", "market_return_expectation"):
            if not math.isfinite(getattr(self, name)):
                raise DataError(f"CAPM input {name} must be finite")


@dataclass(frozen=True)
class PeriodData:
    """One calendar-year period of a stock.

    ``path`` starts at the previous period's last close when one exists.
    """

    label: int
    path: PricePath
    capm: CapmInputs | None = None


@dataclass(frozen=True)
class StockDataset:
    """Contiguous yearly periods of one stock, oldest first."""

    stock_id: str
    periods: tuple[PeriodData, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "periods", tuple(self.periods))
        if not self.periods:
            raise InsufficientDataError(f"stock {self.stock_id} has no periods")
        labels = [p.label for p in self.periods]
        for previous, current in zip(labels, labels[1:], strict=False):
            if current != previous + 1:
                raise DataError(f"stock {self.stock_id}: periods {previous} and {current} are not contiguous")

    @property
    def n_periods(self) -> int:
        return len(self.periods)


@dataclass(frozen=True)
class PeriodRecord:
    """Estimates of one period and the forecast that gates on them.

    ``outperformed`` is R_tilde > C for this period and gates the next one;
    ``invested`` is true when the previous period outperformed with a
    non-degenerate conditional evaluation, and only then is ``nu_tilde``
    non-zero. ``forward_forecast`` is the nu_tilde this period hands to the
    next one.
    """

    period_index: int
    nu_hat: float
    sigma2_hat: float
    realized_return: float
    benchmark_c: float
    outperformed: bool
    invested: bool
    nu_tilde: float
    bias: float
    forward_forecast: float = 0.0
    degenerate: bool = False


@dataclass(frozen=True)
class InSampleReport:
    """Every period's record of one stock with each method's forecast for it.

    ``simple`` and ``es`` hold one forecast per period followed by the
    forecast of the next period, aligned with ``raw_forecasts(records)``.
    """

    labels: tuple[int, ...]
    records: tuple[PeriodRecord, ...]
    simple: tuple[float, ...]
    es: tuple[float, ...]
    ssd_raw: float
    ssd_simple: float
    ssd_es: float


@dataclass(frozen=True)
class BiasDiagnostics:
    """Serial-correlation checks of one stock's in-sample bias series."""

    stock_id: str
    acf: AcfResult
    ljung_box: LjungBoxResult


@dataclass(frozen=True)
class ForecastReport:
    """Holdout forecasts of one stock and their squared deviations."""

    stock_id: str
    holdout_nu_hat: float
    raw_conditional: float
    simple_adjusted: float
    es_adjusted: float
    alpha: float
    in_sample: InSampleReport | None = None

    @property
    def sd_raw(self) -> float:
        return (self.raw_conditional - self.holdout_nu_hat) ** 2

    @property
    def sd_simple(self) -> float:
        return (self.simple_adjusted - self.holdout_nu_hat) ** 2

    @property
    def sd_es(self) -> float:
        return (self.es_adjusted - self.holdout_nu_hat) ** 2


@dataclass(frozen=True)
class PortfolioReport:
    """Per-stock reports sorted by stock id, with column totals."""

    reports: Sequence[ForecastReport] = field(default_factory=tuple)

    @property
    def total_sd_raw(self) -> float:
        return math.fsum(r.sd_raw for r in self.reports)

    @property
    def total_sd_simple(self) -> float:
        return math.fsum(r.sd_simple for r in self.reports)

    @property
    def total_sd_es(self) -> float:
        return math.fsum(r.sd_es for r in self.reports)
