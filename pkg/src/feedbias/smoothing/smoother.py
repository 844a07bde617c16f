"""Single exponential smoothing F_{t+1} = alpha Y_t + (1 - alpha) F_t."""

import logging
import math
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
from scipy import signal

from feedbias.core.errors import InsufficientDataError, InvalidArgumentError
from feedbias.smoothing.models import DEFAULT_ALPHA_GRID, AlphaFit, SmoothedSeries, SmoothingConfig
from feedbias.stochastic.models import FloatArray

logger = logging.getLogger(__name__)

MIN_FIT_OBSERVATIONS = 3


def _same_sse(a: float, b: float) -> bool:
    # Equal up to rounding; such ties go to the smaller alpha.
    return math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-24)


def smooth(observations: npt.ArrayLike, config: SmoothingConfig | None = None) -> SmoothedSeries:
    """Run the smoothing recurrence left to right.

    The recurrence is the first-order IIR filter with b = [alpha] and
    a = [1, -(1 - alpha)], started from the state (1 - alpha) F_1.
    """
    config = config or SmoothingConfig()
    y = np.array(observations, dtype=np.float64)
    if y.ndim != 1 or y.size == 0:
        raise InsufficientDataError("smoothing needs at least one observation")

    alpha = config.alpha
    first = config.initial_forecast(y[0])
    filtered, _ = signal.lfilter([alpha], [1.0, -(1.0 - alpha)], y, zi=[(1.0 - alpha) * first])
    forecasts = np.concatenate(([first], filtered))
    y.setflags(write=False)
    forecasts.setflags(write=False)
    return SmoothedSeries(observations=y, forecasts=forecasts, alpha=alpha)


def weight_expansion(config: SmoothingConfig, t: int) -> FloatArray:
    """Weights of (Y_t, Y_{t-1}, ..., Y_1, F_1) in F_{t+1}.

    Returns alpha (1 - alpha)^k for k = 0..t-1 followed by (1 - alpha)^t.
    """
    if t < 1:
        raise InvalidArgumentError(f"t must be >= 1, got {t}")
    decay = 1.0 - config.alpha
    powers = decay ** np.arange(t + 1, dtype=np.float64)
    weights = config.alpha * powers
    weights[-1] = powers[-1]
    return weights


def fit_alpha(
    observations: npt.ArrayLike,
    grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    init_config: SmoothingConfig | None = None,
) -> AlphaFit:
    """Pick the grid alpha that minimises the one-step-ahead SSE.

    Ties go to the smallest alpha. ``init_config`` supplies the F_1 policy.
    """
    y = np.asarray(observations, dtype=np.float64)
    if y.size < MIN_FIT_OBSERVATIONS:
        raise InsufficientDataError(
            f"fitting alpha needs at least {MIN_FIT_OBSERVATIONS} observations, got {y.size}"
        )
    if not grid:
        raise InvalidArgumentError("alpha grid must be non-empty")

    base = init_config or SmoothingConfig()
    best: AlphaFit | None = None
    for alpha in sorted(grid):
        config = SmoothingConfig(alpha=alpha, init_policy=base.init_policy, initial_value=base.initial_value)
        sse = smooth(y, config).sum_squared_errors
        if best is None or (sse < best.sse and not _same_sse(sse, best.sse)):
            best = AlphaFit(alpha=float(alpha), sse=sse)
    assert best is not None
    logger.debug(f"Fitted alpha={best.alpha} with SSE={best.sse:.6g} over {len(grid)} candidates")
    return best
