"""Limits command: conditional expectation against its long-horizon limit."""

from pathlib import Path

import pandas as pd
import typer

from feedbias.cli.output import emit
from feedbias.conditional.expectation import convergence_table
from feedbias.core.constants import CSV_FLOAT_FORMAT, Direction

app = typer.Typer(help="Convergence of the conditional expectation as T grows")


def _parse_horizons(raw: str) -> list[float]:
    try:
        horizons = [float(part) for part in raw.split(",") if part.strip()]
    except ValueError as e:
        raise typer.BadParameter(f"not a comma-separated list of numbers: {raw!r}", param_hint="--horizons") from e
    if not horizons:
        raise typer.BadParameter("at least one horizon is required", param_hint="--horizons")
    return horizons


@app.callback(invoke_without_command=True)
def run_limits(
    nu: float = typer.Option(..., "--nu", help="Log-price drift per year"),
    sigma: float = typer.Option(0.3, "--sigma", help="Volatility per sqrt(year)"),
    threshold: float = typer.Option(0.0, "--C", help="Threshold on the total log-return"),
    direction: Direction = typer.Option(Direction.ABOVE, "--direction"),
    horizons: str = typer.Option("1,10,100,10000", "--horizons", help="Comma-separated horizons"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write CSV here instead of stdout"),
) -> None:
    """Emit ``T,expectation,limit,gap`` per horizon."""
    points = convergence_table(nu, sigma, threshold, direction, _parse_horizons(horizons))
    frame = pd.DataFrame(
        {
            "T": [p.T for p in points],
            "expectation": [p.expectation for p in points],
            "limit": [p.limit for p in points],
            "gap": [p.gap for p in points],
        }
    )
    emit(frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n"), out)
