"""Diagnose command: ACF, PACF and the Ljung-Box test of a value series."""

from pathlib import Path

import typer

from feedbias.cli.inputs import read_value_csv
from feedbias.cli.output import emit
from feedbias.diagnostics.autocorrelation import acf_pacf, format_acf_csv
from feedbias.diagnostics.ljung_box import ljung_box

app = typer.Typer(help="Serial-correlation diagnostics of a value series")


@app.callback(invoke_without_command=True)
def run_diagnose(
    input_path: Path = typer.Option(..., "--input", "-i", help="CSV with header value"),
    lags: int = typer.Option(10, "--lags", "-l", help="Largest lag tested"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write CSV here instead of stdout"),
) -> None:
    """Emit ``lag,acf,pacf``; print the white-noise verdicts and ``Q=<v> p=<v> lags=<h>`` to stderr."""
    values = read_value_csv(input_path)
    correlations = acf_pacf(values, lags)
    test = ljung_box(values, lags)
    emit(format_acf_csv(correlations), out)
    verdict = "rejected" if test.rejects_white_noise() else "not rejected"
    typer.echo(f"acf within band: {correlations.within_band_fraction():.4g}, white noise {verdict} at 5%", err=True)
    typer.echo(f"Q={test.q_statistic:.10g} p={test.p_value:.10g} lags={test.lags_tested}", err=True)
