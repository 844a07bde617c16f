"""Smooth command: single exponential smoothing of a value series."""

import logging
from pathlib import Path

import numpy as np
import pandas as pd
import typer

from feedbias.cli.inputs import read_value_csv
from feedbias.cli.output import emit
from feedbias.core.constants import CSV_FLOAT_FORMAT
from feedbias.smoothing.models import DEFAULT_ALPHA, SmoothingConfig
from feedbias.smoothing.smoother import fit_alpha, smooth

app = typer.Typer(help="Single exponential smoothing of a value series")
logger = logging.getLogger(__name__)


@app.callback(invoke_without_command=True)
def run_smooth(
    input_path: Path = typer.Option(..., "--input", "-i", help="CSV with header value"),
    alpha: float = typer.Option(DEFAULT_ALPHA, "--alpha", help="Smoothing factor in [0, 1]"),
    fit: bool = typer.Option(False, "--fit", help="Pick alpha by minimum one-step SSE"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write CSV here instead of stdout"),
) -> None:
    """Emit ``value,forecast``; the last row carries the next forecast with no value."""
    values = read_value_csv(input_path)
    if fit:
        fitted = fit_alpha(values)
        alpha = fitted.alpha
        typer.echo(f"alpha={alpha:g} sse={fitted.sse:.10g}", err=True)

    series = smooth(values, SmoothingConfig(alpha=alpha))
    frame = pd.DataFrame(
        {
            "value": np.append(series.observations, np.nan),
            "forecast": series.forecasts,
        }
    )
    emit(frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n"), out)
