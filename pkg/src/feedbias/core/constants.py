"""Core constants and enums."""

from enum import Enum

# Trading days per year; daily data uses h = 1 / TRADING_DAYS_PER_YEAR.
TRADING_DAYS_PER_YEAR = 252

# Beyond this |d| the conditioning tail underflows in double precision.
DEGENERATE_MILLS_ARGUMENT = 37.0

# Significant digits used for every emitted CSV float.
CSV_FLOAT_FORMAT = "%.10g"


class Direction(str, Enum):
    """Side of the return threshold C that the estimate is conditioned on.

    Ties R_T == C belong to AT_OR_BELOW.
    """

    ABOVE = "above"
    AT_OR_BELOW = "at-or-below"

    def holds(self, total_return: float, threshold: float) -> bool:
        """Whether a realized total return satisfies this condition."""
        if self is Direction.ABOVE:
            return total_return > threshold
        return total_return <= threshold

    @property
    def event(self) -> str:
        return "R_T > C" if self is Direction.ABOVE else "R_T <= C"
