"""Pipeline command: score conditional, simple and ES forecasts for a portfolio."""

from pathlib import Path

import typer
from rich.table import Table

from feedbias.cli.output import emit, stderr_console
from feedbias.config.loader import ConfigLoader
from feedbias.config.models import PipelineConfig
from feedbias.pipeline.ingest import ingest
from feedbias.pipeline.models import PortfolioReport
from feedbias.pipeline.report import (
    format_diagnostics_csv,
    format_records_csv,
    format_report_csv,
    run_portfolio,
)

app = typer.Typer(help="Run the portfolio forecasting pipeline")


def _summary_table(portfolio: PortfolioReport) -> Table:
    table = Table(title="Squared deviation from the holdout drift")
    table.add_column("stock")
    table.add_column("conditional", justify="right")
    table.add_column("simple", justify="right")
    table.add_column("smoothed", justify="right")
    for report in portfolio.reports:
        table.add_row(report.stock_id, f"{report.sd_raw:.4g}", f"{report.sd_simple:.4g}", f"{report.sd_es:.4g}")
    table.add_row(
        "TOTAL",
        f"{portfolio.total_sd_raw:.4g}",
        f"{portfolio.total_sd_simple:.4g}",
        f"{portfolio.total_sd_es:.4g}",
        style="bold",
    )
    return table


@app.callback(invoke_without_command=True)
def run_pipeline(
    prices: Path = typer.Option(..., "--prices", "-p", help="CSV with header stock_id,date,close"),
    capm: Path | None = typer.Option(None, "--capm", help="CSV with header stock_id,year,beta,risk_free,market_return_expectation"),
    config: Path | None = typer.Option(None, "--config", "-c", help="YAML pipeline settings"),
    workers: int = typer.Option(1, "--workers", min=1, help="Stocks scored in parallel"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Skip the summary table"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write CSV here instead of stdout"),
    records_out: Path | None = typer.Option(
        None, "--records-out", help="Also write every in-sample period with its three forecasts"
    ),
    diagnostics_out: Path | None = typer.Option(
        None, "--diagnostics-out", help="Also write in-sample SSD and bias-series Ljung-Box checks per stock"
    ),
) -> None:
    """Emit ``stock_id,nu_hat,nu_tilde,sa,esa,sd_tilde,sd_sa,sd_esa`` plus a TOTAL row."""
    settings = ConfigLoader.load(config) if config is not None else PipelineConfig()
    datasets = ingest(prices, capm, settings)
    portfolio = run_portfolio(datasets, settings, workers=workers)
    emit(format_report_csv(portfolio), out)
    if records_out is not None:
        emit(format_records_csv(portfolio), records_out)
    if diagnostics_out is not None:
        emit(format_diagnostics_csv(portfolio, settings.diagnostic_lags), diagnostics_out)
    if not quiet:
        stderr_console.print(_summary_table(portfolio))
