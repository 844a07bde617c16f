"""Surface command: conditional expectation of mu_hat over a (mu, C) grid."""

from pathlib import Path

import numpy as np
import typer

from feedbias.cli.output import emit
from feedbias.conditional.surface import bias_surface, format_surface_csv
from feedbias.core.constants import Direction

app = typer.Typer(help="Bias surface over a grid of drifts and thresholds")


@app.callback(invoke_without_command=True)
def run_surface(
    mu_min: float = typer.Option(-0.5, "--mu-min"),
    mu_max: float = typer.Option(0.5, "--mu-max"),
    mu_steps: int = typer.Option(21, "--mu-steps", min=1),
    c_min: float = typer.Option(-0.5, "--c-min"),
    c_max: float = typer.Option(0.5, "--c-max"),
    c_steps: int = typer.Option(21, "--c-steps", min=1),
    sigma: float = typer.Option(0.3, "--sigma", help="Volatility per sqrt(year)"),
    horizon: float = typer.Option(1.0, "--T", help="Horizon in years"),
    direction: Direction = typer.Option(Direction.ABOVE, "--direction"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write CSV here instead of stdout"),
) -> None:
    """Emit ``mu,C,expectation,bias,flag`` for every grid cell."""
    mu_grid = np.linspace(mu_min, mu_max, mu_steps).tolist()
    c_grid = np.linspace(c_min, c_max, c_steps).tolist()
    cells = bias_surface(mu_grid, c_grid, sigma=sigma, T=horizon, direction=direction)
    emit(format_surface_csv(cells), out)
