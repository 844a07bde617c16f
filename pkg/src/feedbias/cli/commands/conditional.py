"""Conditional command: E[nu_hat | condition] and an optional Monte Carlo check."""

from pathlib import Path

import pandas as pd
import typer

from feedbias.cli.output import emit
from feedbias.conditional.expectation import conditional_nu
from feedbias.conditional.models import ConditionalQuery
from feedbias.conditional.oracle import monte_carlo_conditional
from feedbias.core.constants import CSV_FLOAT_FORMAT, Direction

app = typer.Typer(help="Conditional expectation of the drift estimator")


@app.callback(invoke_without_command=True)
def run_conditional(
    nu: float = typer.Option(..., "--nu", help="Log-price drift per year"),
    sigma: float = typer.Option(..., "--sigma", help="Volatility per sqrt(year)"),
    horizon: float = typer.Option(..., "--T", help="Horizon in years"),
    threshold: float = typer.Option(..., "--C", help="Threshold on the total log-return"),
    direction: Direction = typer.Option(Direction.ABOVE, "--direction", help="Side of C conditioned on"),
    paths: int | None = typer.Option(None, "--paths", help="Also estimate by Monte Carlo with this many paths"),
    seed: int | None = typer.Option(None, "--seed", help="Seed for --paths"),
    workers: int = typer.Option(1, "--workers", min=1, help="Threads for the Monte Carlo blocks"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write CSV here instead of stdout"),
) -> None:
    """Emit ``expectation,tail_probability,bias,d`` plus Monte Carlo columns with --paths."""
    if paths is not None and seed is None:
        raise typer.BadParameter("--seed is required with --paths", param_hint="--seed")

    query = ConditionalQuery(nu=nu, sigma=sigma, T=horizon, C=threshold, direction=direction)
    result = conditional_nu(query)
    row = {
        "expectation": result.expectation,
        "tail_probability": result.tail_probability,
        "bias": result.bias,
        "d": result.mills_argument,
    }
    if paths is not None:
        assert seed is not None
        estimate = monte_carlo_conditional(query, paths=paths, seed=seed, workers=workers)
        row.update(
            {"mc_mean": estimate.mean, "mc_std_error": estimate.std_error, "mc_retained": estimate.retained}
        )
    emit(pd.DataFrame([row]).to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n"), out)
