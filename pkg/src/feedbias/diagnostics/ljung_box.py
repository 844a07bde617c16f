"""Ljung-Box portmanteau test for serial correlation."""

import logging

import numpy as np
import numpy.typing as npt
from scipy import special

from feedbias.diagnostics.autocorrelation import sample_acf, validate_series
from feedbias.diagnostics.models import LjungBoxResult

logger = logging.getLogger(__name__)

# Below this many observations the chi-square reference is a rough guide only.
SMALL_SAMPLE_SIZE = 30


def chi_square_survival(q: float, dof: int) -> float:
    """P{X > q} for X ~ chi-square(dof), the regularized upper incomplete gamma."""
    return float(special.gammaincc(dof / 2.0, q / 2.0))


def ljung_box(series: npt.ArrayLike, lags: int, warn_small_sample: bool = True) -> LjungBoxResult:
    """Q = n (n + 2) sum_{k=1}^{h} rho_k^2 / (n - k) against chi-square(h).

    Degrees of freedom are not reduced for fitted parameters; the series is
    tested before any model is fitted to it. Callers testing many short
    series can turn off the per-call small-sample warning and read
    ``small_sample`` instead.
    """
    y = validate_series(series, lags)
    n = int(y.size)
    rho = sample_acf(y, lags)
    k = np.arange(1, lags + 1)
    q = float(n * (n + 2) * np.sum(rho**2 / (n - k)))
    p_value = chi_square_survival(q, lags)

    small = n < SMALL_SAMPLE_SIZE
    if small and warn_small_sample:
        logger.warning(f"Ljung-Box on n={n} < {SMALL_SAMPLE_SIZE} observations; the chi-square p-value is approximate")
    return LjungBoxResult(q_statistic=q, lags_tested=lags, p_value=p_value, n=n, small_sample=small)
