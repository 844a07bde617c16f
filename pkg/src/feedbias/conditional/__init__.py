"""Conditional estimates of the drift given past return performance."""

from feedbias.conditional.expectation import (
    asymptotic_limit,
    conditional_mu,
    conditional_nu,
    convergence_table,
    tail_probability,
)
from feedbias.conditional.models import (
    ConditionalQuery,
    ConditionalResult,
    ConvergencePoint,
    MonteCarloEstimate,
    SurfaceCell,
)
from feedbias.conditional.normal import inverse_mills_ratio
from feedbias.conditional.oracle import integral_conditional_nu, monte_carlo_conditional
from feedbias.conditional.surface import bias_surface, format_surface_csv, surface_frame

__all__ = [
    # Types
    "ConditionalQuery",
    "ConditionalResult",
    "ConvergencePoint",
    "MonteCarloEstimate",
    "SurfaceCell",
    # Closed forms
    "conditional_nu",
    "conditional_mu",
    "tail_probability",
    "asymptotic_limit",
    "convergence_table",
    "inverse_mills_ratio",
    # Oracles
    "monte_carlo_conditional",
    "integral_conditional_nu",
    # Surface
    "bias_surface",
    "surface_frame",
    "format_surface_csv",
]
