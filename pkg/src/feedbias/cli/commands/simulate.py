"""Simulate command: one exact GBM price path as CSV."""

from pathlib import Path

import typer

from feedbias.cli.output import emit
from feedbias.stochastic.io import format_price_path_csv
from feedbias.stochastic.models import GbmParams
from feedbias.stochastic.simulate import simulate_gbm

app = typer.Typer(help="Simulate a geometric Brownian motion price path")


@app.callback(invoke_without_command=True)
def run_simulate(
    mu: float = typer.Option(..., "--mu", help="Drift of the price per year"),
    sigma: float = typer.Option(..., "--sigma", help="Volatility per sqrt(year)"),
    a0: float = typer.Option(..., "--a0", help="Initial price"),
    horizon: float = typer.Option(..., "--T", help="Horizon in years"),
    n: int = typer.Option(..., "--n", help="Number of steps"),
    seed: int = typer.Option(..., "--seed", help="Seed of the random stream"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write CSV here instead of stdout"),
) -> None:
    """Emit ``date_index,price`` for n + 1 sampling times."""
    path = simulate_gbm(GbmParams(mu=mu, sigma=sigma), a0=a0, T=horizon, n=n, seed=seed)
    emit(format_price_path_csv(path), out)
