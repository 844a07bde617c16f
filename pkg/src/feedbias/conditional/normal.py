"""Standard normal tails and the inverse Mills ratio, accurate far into the tails.

The ratio phi(d) / (1 - Phi(d)) is written as sqrt(2/pi) / erfcx(d / sqrt(2)),
which never forms the vanishing tail explicitly: erfcx is the scaled
complementary error function exp(x^2) erfc(x).
"""

import math

from scipy import special

_SQRT_2 = math.sqrt(2.0)
_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


def upper_tail(d: float) -> float:
    """1 - Phi(d) without cancellation."""
    return float(special.ndtr(-d))


def lower_tail(d: float) -> float:
    """Phi(d)."""
    return float(special.ndtr(d))


def inverse_mills_ratio(d: float) -> float:
    """phi(d) / (1 - Phi(d)), the mean excess of a normal truncated below at d.

    Tends to 0 as d -> -inf and behaves like d + 1/d as d -> +inf.
    """
    return _SQRT_2_OVER_PI / float(special.erfcx(d / _SQRT_2))
