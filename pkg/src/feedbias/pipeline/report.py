"""Holdout scoring of the raw, simple and ES-adjusted forecasts."""

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import pandas as pd

from feedbias.config.models import EsTarget, PipelineConfig
from feedbias.core.constants import CSV_FLOAT_FORMAT
from feedbias.core.errors import DegenerateVarianceError, InsufficientDataError
from feedbias.diagnostics.autocorrelation import acf_pacf
from feedbias.diagnostics.ljung_box import SMALL_SAMPLE_SIZE, ljung_box
from feedbias.pipeline.adjust import es_adjust, simple_adjust, smoothing_series, sum_squared_deviation
from feedbias.pipeline.ingest import split_holdout
from feedbias.pipeline.models import (
    BiasDiagnostics,
    ForecastReport,
    InSampleReport,
    PeriodRecord,
    PortfolioReport,
    StockDataset,
)
from feedbias.pipeline.records import build_period_records, raw_forecasts
from feedbias.smoothing.models import SmoothingConfig
from feedbias.smoothing.smoother import MIN_FIT_OBSERVATIONS, fit_alpha
from feedbias.stochastic.estimate import estimate_unconditional, log_returns
from feedbias.stochastic.models import PricePath

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ["stock_id", "nu_hat", "nu_tilde", "sa", "esa", "sd_tilde", "sd_sa", "sd_esa"]
RECORD_COLUMNS = [
    "stock_id",
    "period",
    "nu_hat",
    "sigma2_hat",
    "realized_return",
    "benchmark_c",
    "outperformed",
    "invested",
    "degenerate",
    "nu_tilde",
    "sa",
    "esa",
    "bias",
]
DIAGNOSTIC_COLUMNS = [
    "stock_id",
    "alpha",
    "ssd_tilde",
    "ssd_sa",
    "ssd_esa",
    "n",
    "lags",
    "q",
    "p_value",
    "rejects_white_noise",
    "acf_within_band",
]
TOTAL_LABEL = "TOTAL"


def smoothing_for(stock_id: str, records: Sequence[PeriodRecord], config: PipelineConfig) -> SmoothingConfig:
    """Configured alpha, or the fitted one when ``fit_alpha`` is on."""
    if not config.fit_alpha:
        return SmoothingConfig(alpha=config.alpha)
    series = smoothing_series(records, config.es_target)
    if len(series) < MIN_FIT_OBSERVATIONS:
        logger.warning(
            f"stock {stock_id}: {len(series)} points are too few to fit alpha, using alpha={config.alpha}"
        )
        return SmoothingConfig(alpha=config.alpha)
    return SmoothingConfig(alpha=fit_alpha(series, config.alpha_grid).alpha)


def in_sample_report(
    data: StockDataset,
    records: Sequence[PeriodRecord],
    smoothing: SmoothingConfig,
    config: PipelineConfig,
) -> InSampleReport:
    """Forecasts of every method for every period and their in-sample SSD."""
    raw = raw_forecasts(records)
    simple = simple_adjust(records)
    es = es_adjust(records, smoothing, config.es_target)
    return InSampleReport(
        labels=tuple(p.label for p in data.periods),
        records=tuple(records),
        simple=tuple(simple),
        es=tuple(es),
        ssd_raw=sum_squared_deviation(raw, records),
        ssd_simple=sum_squared_deviation(simple, records),
        ssd_es=sum_squared_deviation(es, records),
    )


def score_and_report(
    data: StockDataset,
    holdout: PricePath,
    config: PipelineConfig | None = None,
) -> ForecastReport:
    """Forecast the holdout period three ways and compare with its nu_hat."""
    config = config or PipelineConfig()
    records = build_period_records(data, config)
    smoothing = smoothing_for(data.stock_id, records, config)
    in_sample = in_sample_report(data, records, smoothing, config)

    holdout_nu_hat = estimate_unconditional(log_returns(holdout)).nu_hat
    return ForecastReport(
        stock_id=data.stock_id,
        holdout_nu_hat=holdout_nu_hat,
        raw_conditional=records[-1].forward_forecast,
        simple_adjusted=in_sample.simple[-1],
        es_adjusted=in_sample.es[-1],
        alpha=smoothing.alpha,
        in_sample=in_sample,
    )


def _score_stock(data: StockDataset, config: PipelineConfig) -> ForecastReport:
    if not config.holdout:
        raise InsufficientDataError("scoring needs a holdout period; set holdout: true")
    history, holdout = split_holdout(data)
    return score_and_report(history, holdout, config)


def run_portfolio(
    datasets: Sequence[StockDataset],
    config: PipelineConfig | None = None,
    workers: int = 1,
) -> PortfolioReport:
    """Score every stock against its last period; reports sorted by stock id."""
    config = config or PipelineConfig()
    ordered = sorted(datasets, key=lambda d: d.stock_id)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda d: _score_stock(d, config), ordered))
    else:
        reports = [_score_stock(d, config) for d in ordered]
    logger.info(f"Scored {len(reports)} stocks")
    return PortfolioReport(reports=tuple(reports))


def report_frame(portfolio: PortfolioReport) -> pd.DataFrame:
    """One row per stock plus a TOTAL row summing the squared deviations."""
    rows = [
        [r.stock_id, r.holdout_nu_hat, r.raw_conditional, r.simple_adjusted, r.es_adjusted, r.sd_raw, r.sd_simple, r.sd_es]
        for r in portfolio.reports
    ]
    rows.append(
        [
            TOTAL_LABEL,
            math.nan,
            math.nan,
            math.nan,
            math.nan,
            portfolio.total_sd_raw,
            portfolio.total_sd_simple,
            portfolio.total_sd_es,
        ]
    )
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def format_report_csv(portfolio: PortfolioReport) -> str:
    return report_frame(portfolio).to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")


def _in_sample(report: ForecastReport) -> InSampleReport:
    if report.in_sample is None:
        raise InsufficientDataError(f"stock {report.stock_id}: report carries no in-sample records")
    return report.in_sample


def records_frame(portfolio: PortfolioReport) -> pd.DataFrame:
    """One row per stock and in-sample period with each method's forecast."""
    rows = []
    for report in portfolio.reports:
        in_sample = _in_sample(report)
        for label, record in zip(in_sample.labels, in_sample.records, strict=True):
            i = record.period_index
            rows.append(
                [
                    report.stock_id,
                    label,
                    record.nu_hat,
                    record.sigma2_hat,
                    record.realized_return,
                    record.benchmark_c,
                    record.outperformed,
                    record.invested,
                    record.degenerate,
                    record.nu_tilde,
                    in_sample.simple[i],
                    in_sample.es[i],
                    record.bias,
                ]
            )
    return pd.DataFrame(rows, columns=RECORD_COLUMNS)


def format_records_csv(portfolio: PortfolioReport) -> str:
    return records_frame(portfolio).to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")


def bias_diagnostics(stock_id: str, records: Sequence[PeriodRecord], max_lag: int) -> BiasDiagnostics | None:
    """ACF and Ljung-Box test of the bias series of periods 1..N-1.

    Lags are capped at n - 1. Returns None when the series is too short or
    constant, as for a stock that was never invested.
    """
    series = smoothing_series(records, EsTarget.BIAS)
    lags = min(max_lag, len(series) - 1)
    if lags < 1:
        logger.debug(f"stock {stock_id}: {len(series)} bias points are too few to diagnose")
        return None
    try:
        acf = acf_pacf(series, lags)
        test = ljung_box(series, lags, warn_small_sample=False)
    except DegenerateVarianceError:
        logger.debug(f"stock {stock_id}: constant bias series, no diagnostics")
        return None
    return BiasDiagnostics(stock_id=stock_id, acf=acf, ljung_box=test)


def diagnostics_frame(portfolio: PortfolioReport, max_lag: int) -> pd.DataFrame:
    """One row per stock: in-sample SSD per method and the bias-series checks.

    Test columns are empty for stocks whose bias series cannot be diagnosed.
    """
    rows = []
    small = 0
    for report in portfolio.reports:
        in_sample = _in_sample(report)
        row: list[object] = [report.stock_id, report.alpha, in_sample.ssd_raw, in_sample.ssd_simple, in_sample.ssd_es]
        checks = bias_diagnostics(report.stock_id, in_sample.records, max_lag)
        if checks is None:
            row.extend([None] * 6)
        else:
            test = checks.ljung_box
            small += test.small_sample
            row.extend(
                [
                    test.n,
                    test.lags_tested,
                    test.q_statistic,
                    test.p_value,
                    test.rejects_white_noise(),
                    checks.acf.within_band_fraction(),
                ]
            )
        rows.append(row)
    if small:
        logger.warning(f"{small} bias series have fewer than {SMALL_SAMPLE_SIZE} points; Ljung-Box p-values are approximate")
    return pd.DataFrame(rows, columns=DIAGNOSTIC_COLUMNS)


def format_diagnostics_csv(portfolio: PortfolioReport, max_lag: int) -> str:
    frame = diagnostics_frame(portfolio, max_lag)
    return frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
