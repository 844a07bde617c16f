"""Result types of the serial-correlation checks."""

import math
from dataclasses import dataclass

import numpy as np

from feedbias.stochastic.models import FloatArray


def white_noise_band(n: int) -> float:
    """Half-width 3 / sqrt(n) of the band white-noise autocorrelations stay inside."""
    return 3.0 / math.sqrt(n)


@dataclass(frozen=True)
class AcfResult:
    """Sample ACF and PACF at lags 1..lags; lag 0 is implicitly 1."""

    lags: int
    acf: FloatArray
    pacf: FloatArray
    n: int

    @property
    def band(self) -> float:
        return white_noise_band(self.n)

    def within_band_fraction(self) -> float:
        """Share of lags whose |acf| lies inside the white-noise band."""
        return float(np.mean(np.abs(self.acf) < self.band))


@dataclass(frozen=True)
class LjungBoxResult:
    q_statistic: float
    lags_tested: int
    p_value: float
    n: int
    small_sample: bool = False

    def rejects_white_noise(self, level: float = 0.05) -> bool:
        return self.p_value < level
