"""Estimate command: unconditional drift and variance of a price file."""

from pathlib import Path

import pandas as pd
import typer

from feedbias.cli.output import emit
from feedbias.core.constants import CSV_FLOAT_FORMAT, TRADING_DAYS_PER_YEAR
from feedbias.stochastic.estimate import estimate_unconditional, log_returns
from feedbias.stochastic.io import read_price_path_csv

app = typer.Typer(help="Estimate nu and sigma^2 from a price path")


@app.callback(invoke_without_command=True)
def run_estimate(
    prices: Path = typer.Option(..., "--prices", "-p", help="CSV with header date_index,price"),
    steps_per_year: int = typer.Option(
        TRADING_DAYS_PER_YEAR, "--steps-per-year", min=1, help="Sampling steps per year"
    ),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write CSV here instead of stdout"),
) -> None:
    """Emit ``nu_hat,sigma2_hat,mu_hat,n,T``."""
    path = read_price_path_csv(prices, step_h=1.0 / steps_per_year)
    result = estimate_unconditional(log_returns(path))
    frame = pd.DataFrame(
        [[result.nu_hat, result.sigma2_hat, result.mu_hat, result.n, result.T]],
        columns=["nu_hat", "sigma2_hat", "mu_hat", "n", "T"],
    )
    emit(frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n"), out)
