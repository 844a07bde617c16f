#!/usr/bin/env python3
"""Plot a CSV emitted by the feedbias CLI.

Recognised layouts:
    - surface:  mu,C,expectation,bias,flag  -> one curve per mu over C
    - diagnose: lag,acf,pacf                -> bar charts, white-noise band with --n
    - smooth:   value,forecast              -> observations with forecasts
    - limits:   T,expectation,limit,gap     -> expectation and limit against log T
    - simulate: date_index,price            -> price path

Usage:
    feedbias surface --sigma 0.3 > surface.csv
    uv run python scripts/plot_csv.py surface.csv --out surface.png
"""

import math
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402


def _plot_surface(frame: pd.DataFrame, ax, n_obs: int | None) -> None:
    for mu, group in frame[frame["flag"] == "ok"].groupby("mu"):
        ax.plot(group["C"], group["expectation"], label=f"mu={mu:g}")
    ax.set_xlabel("C")
    ax.set_ylabel("E[mu_hat | R_T > C]")
    ax.legend(fontsize="small", ncol=2)


def _plot_acf(frame: pd.DataFrame, ax, n_obs: int | None) -> None:
    width = 0.4
    ax.bar(frame["lag"] - width / 2, frame["acf"], width=width, label="ACF")
    ax.bar(frame["lag"] + width / 2, frame["pacf"], width=width, label="PACF")
    if n_obs:
        band = 3.0 / math.sqrt(n_obs)
        ax.axhline(band, linestyle="--", color="grey")
        ax.axhline(-band, linestyle="--", color="grey")
    ax.set_xlabel("lag")
    ax.legend()


def _plot_smooth(frame: pd.DataFrame, ax, n_obs: int | None) -> None:
    ax.plot(frame.index, frame["value"], marker="o", label="observed")
    ax.plot(frame.index, frame["forecast"], color="red", label="smoothed forecast")
    ax.set_xlabel("period")
    ax.legend()


def _plot_limits(frame: pd.DataFrame, ax, n_obs: int | None) -> None:
    ax.semilogx(frame["T"], frame["expectation"], marker="o", label="expectation")
    ax.semilogx(frame["T"], frame["limit"], linestyle="--", label="limit")
    ax.set_xlabel("T")
    ax.legend()


def _plot_path(frame: pd.DataFrame, ax, n_obs: int | None) -> None:
    ax.plot(frame["date_index"], frame["price"])
    ax.set_xlabel("step")
    ax.set_ylabel("price")


LAYOUTS = {
    ("mu", "C", "expectation", "bias", "flag"): _plot_surface,
    ("lag", "acf", "pacf"): _plot_acf,
    ("value", "forecast"): _plot_smooth,
    ("T", "expectation", "limit", "gap"): _plot_limits,
    ("date_index", "price"): _plot_path,
}


def main(source: Path, out: Path | None, n_obs: int | None = None) -> int:
    frame = pd.read_csv(source)
    plotter = LAYOUTS.get(tuple(frame.columns))
    if plotter is None:
        print(f"Unrecognised columns: {','.join(frame.columns)}")
        return 1

    fig, ax = plt.subplots(figsize=(8, 5))
    plotter(frame, ax, n_obs)
    ax.set_title(source.name)
    fig.tight_layout()
    target = out or source.with_suffix(".png")
    fig.savefig(target, dpi=120)
    print(f"      Plot saved to: {target}")
    return 0


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Plot a CSV emitted by the feedbias CLI")
    parser.add_argument("source", type=Path, help="CSV file")
    parser.add_argument("--out", type=Path, default=None, help="Image path (default: <source>.png)")
    parser.add_argument("--n", type=int, default=None, help="Series length, draws the 3/sqrt(n) band on ACF plots")
    args = parser.parse_args()

    sys.exit(main(args.source, args.out, args.n))
