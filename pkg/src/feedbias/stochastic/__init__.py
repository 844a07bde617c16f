"""Geometric Brownian motion: model types, exact simulation and estimation."""

from feedbias.stochastic.estimate import annualize, estimate_unconditional, log_returns
from feedbias.stochastic.io import format_price_path_csv, price_path_frame, read_price_path_csv
from feedbias.stochastic.models import EstimateResult, GbmParams, PricePath, ReturnSeries
from feedbias.stochastic.simulate import simulate_gbm, simulate_terminal_log_returns

__all__ = [
    # Types
    "GbmParams",
    "PricePath",
    "ReturnSeries",
    "EstimateResult",
    # Simulation
    "simulate_gbm",
    "simulate_terminal_log_returns",
    # Estimation
    "log_returns",
    "estimate_unconditional",
    "annualize",
    # CSV
    "price_path_frame",
    "format_price_path_csv",
    "read_price_path_csv",
]
