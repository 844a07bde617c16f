"""Portfolio workflow: ingest, gate, adjust and score conditional forecasts."""

from feedbias.pipeline.adjust import es_adjust, simple_adjust, smoothing_series, sum_squared_deviation
from feedbias.pipeline.benchmark import capm_benchmark, period_benchmark
from feedbias.pipeline.ingest import ingest, read_capm, read_prices, split_holdout
from feedbias.pipeline.models import (
    BiasDiagnostics,
    CapmInputs,
    ForecastReport,
    InSampleReport,
    PeriodData,
    PeriodRecord,
    PortfolioReport,
    StockDataset,
)
from feedbias.pipeline.records import build_period_records, raw_forecasts
from feedbias.pipeline.report import (
    bias_diagnostics,
    diagnostics_frame,
    format_diagnostics_csv,
    format_records_csv,
    format_report_csv,
    in_sample_report,
    records_frame,
    report_frame,
    run_portfolio,
    score_and_report,
    smoothing_for,
)
from feedbias.pipeline.synthetic import SyntheticPortfolio, synthetic_portfolio, write_fixture

__all__ = [
    # Types
    "CapmInputs",
    "PeriodData",
    "StockDataset",
    "PeriodRecord",
    "ForecastReport",
    "InSampleReport",
    "BiasDiagnostics",
    "PortfolioReport",
    # Benchmark
    "capm_benchmark",
    "period_benchmark",
    # Records
    "build_period_records",
    "raw_forecasts",
    # Adjustments
    "simple_adjust",
    "es_adjust",
    "smoothing_series",
    "sum_squared_deviation",
    # Scoring
    "score_and_report",
    "smoothing_for",
    "run_portfolio",
    "report_frame",
    "format_report_csv",
    "in_sample_report",
    "records_frame",
    "format_records_csv",
    "bias_diagnostics",
    "diagnostics_frame",
    "format_diagnostics_csv",
    # Ingestion
    "ingest",
    "read_prices",
    "read_capm",
    "split_holdout",
    # Synthetic data
    "SyntheticPortfolio",
    "synthetic_portfolio",
    "write_fixture",
]
