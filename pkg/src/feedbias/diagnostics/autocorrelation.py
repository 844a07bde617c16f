"""Sample autocorrelation and partial autocorrelation.

The ACF uses the pooled denominator sum((y_t - ybar)^2) at every lag, which
keeps |acf| <= 1 and is the form the Ljung-Box statistic expects. The PACF
follows from the ACF by the Durbin-Levinson recursion.
"""

import logging

import numpy as np
import numpy.typing as npt
import pandas as pd

from feedbias.core.constants import CSV_FLOAT_FORMAT
from feedbias.core.errors import DegenerateVarianceError, InvalidArgumentError
from feedbias.diagnostics.models import AcfResult
from feedbias.stochastic.models import FloatArray

logger = logging.getLogger(__name__)

ACF_COLUMNS = ["lag", "acf", "pacf"]


def validate_series(series: npt.ArrayLike, max_lag: int) -> FloatArray:
    """Coerce to a 1-D float array and check lag and variance preconditions."""
    y = np.asarray(series, dtype=np.float64)
    if y.ndim != 1:
        raise InvalidArgumentError("series must be one-dimensional")
    if max_lag < 1 or max_lag >= y.size:
        raise InvalidArgumentError(f"max_lag must satisfy 1 <= max_lag < n = {y.size}, got {max_lag}")
    if np.all(y == y[0]):
        raise DegenerateVarianceError("series is constant; autocorrelation is undefined")
    return y


def sample_acf(y: FloatArray, max_lag: int) -> FloatArray:
    centred = y - y.mean()
    denominator = float(np.dot(centred, centred))
    return np.array(
        [np.dot(centred[k:], centred[:-k]) / denominator for k in range(1, max_lag + 1)],
        dtype=np.float64,
    )


def durbin_levinson(acf: FloatArray) -> FloatArray:
    """Partial autocorrelations phi_kk from autocorrelations rho_1..rho_h."""
    h = acf.size
    rho = np.concatenate(([1.0], acf))
    pacf = np.empty(h, dtype=np.float64)
    phi = np.zeros(h + 1, dtype=np.float64)
    for k in range(1, h + 1):
        previous = phi[1:k]
        numerator = rho[k] - np.dot(previous, rho[k - 1 : 0 : -1])
        denominator = 1.0 - np.dot(previous, rho[1:k])
        phi_kk = numerator / denominator if denominator != 0.0 else 0.0
        updated = previous - phi_kk * previous[::-1]
        phi[1:k] = updated
        phi[k] = phi_kk
        pacf[k - 1] = phi_kk
    return pacf


def acf_pacf(series: npt.ArrayLike, max_lag: int) -> AcfResult:
    """ACF and PACF of ``series`` at lags 1..max_lag.

    Raises:
        InvalidArgumentError: If max_lag < 1 or max_lag >= len(series).
        DegenerateVarianceError: If the series is constant.
    """
    y = validate_series(series, max_lag)
    acf = sample_acf(y, max_lag)
    pacf = durbin_levinson(acf)
    acf.setflags(write=False)
    pacf.setflags(write=False)
    logger.debug(f"ACF over {max_lag} lags of n={y.size}: lag-1 {acf[0]:.6g}")
    return AcfResult(lags=max_lag, acf=acf, pacf=pacf, n=int(y.size))


def acf_frame(result: AcfResult) -> pd.DataFrame:
    return pd.DataFrame(
        {"lag": np.arange(1, result.lags + 1), "acf": result.acf, "pacf": result.pacf},
        columns=ACF_COLUMNS,
    )


def format_acf_csv(result: AcfResult) -> str:
    """CSV ``lag,acf,pacf``, one row per lag."""
    return acf_frame(result).to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
