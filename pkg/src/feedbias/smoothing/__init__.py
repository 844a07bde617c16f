"""Single exponential smoothing of deviation and forecast series."""

from feedbias.smoothing.models import (
    DEFAULT_ALPHA,
    DEFAULT_ALPHA_GRID,
    AlphaFit,
    InitPolicy,
    SmoothedSeries,
    SmoothingConfig,
)
from feedbias.smoothing.smoother import fit_alpha, smooth, weight_expansion

__all__ = [
    "DEFAULT_ALPHA",
    "DEFAULT_ALPHA_GRID",
    "AlphaFit",
    "InitPolicy",
    "SmoothedSeries",
    "SmoothingConfig",
    "smooth",
    "weight_expansion",
    "fit_alpha",
]
