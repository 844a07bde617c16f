"""Closed-form conditional expectations of the drift estimator.

With d = (C - nu T) / (sigma sqrt(T)):

    E[nu_hat | R_T > C]  = nu + sigma / sqrt(T) * phi(d) / (1 - Phi(d))
    E[nu_hat | R_T <= C] = nu - sigma / sqrt(T) * phi(d) / Phi(d)

and phi(d) / Phi(d) is the inverse Mills ratio at -d, so one tail-stable
function serves both directions.
"""

import logging
from collections.abc import Sequence

from feedbias.conditional.models import ConditionalQuery, ConditionalResult, ConvergencePoint
from feedbias.conditional.normal import inverse_mills_ratio, lower_tail, upper_tail
from feedbias.core.constants import DEGENERATE_MILLS_ARGUMENT, Direction
from feedbias.core.errors import DegenerateConditionError

logger = logging.getLogger(__name__)


def tail_probability(q: ConditionalQuery) -> float:
    """P{R_T > C} for ABOVE, P{R_T <= C} = Phi(d) for AT_OR_BELOW."""
    d = q.mills_argument
    if q.direction is Direction.ABOVE:
        return upper_tail(d)
    return lower_tail(d)


def _signed_argument(q: ConditionalQuery) -> float:
    # Argument at which the event's own tail is "upper": d for ABOVE, -d otherwise.
    d = q.mills_argument
    return d if q.direction is Direction.ABOVE else -d


def conditional_nu(q: ConditionalQuery) -> ConditionalResult:
    """E[nu_hat | condition] with its tail probability and bias against nu.

    Raises:
        DegenerateConditionError: If the conditioning event lies beyond the
            double-precision tail (its probability underflows to 0).
    """
    d = q.mills_argument
    signed = _signed_argument(q)
    probability = tail_probability(q)
    if signed > DEGENERATE_MILLS_ARGUMENT or probability <= 0.0:
        raise DegenerateConditionError(q.direction.event, f"d={d:.6g}")

    shift = q.scale * inverse_mills_ratio(signed)
    if q.direction is Direction.AT_OR_BELOW:
        shift = -shift
    expectation = q.nu + shift
    return ConditionalResult(
        expectation=expectation,
        tail_probability=probability,
        bias=expectation - q.nu,
        mills_argument=d,
    )


def conditional_mu(q: ConditionalQuery) -> ConditionalResult:
    """E[mu_hat | condition] = E[nu_hat | condition] + sigma^2 / 2.

    The bias is unchanged: expectation and reference shift together.
    """
    result = conditional_nu(q)
    offset = q.sigma**2 / 2
    return ConditionalResult(
        expectation=result.expectation + offset,
        tail_probability=result.tail_probability,
        bias=result.bias,
        mills_argument=result.mills_argument,
    )


def asymptotic_limit(nu: float, direction: Direction) -> float:
    """Limit of the conditional expectation as T -> infinity.

    ABOVE keeps nu when nu > 0 and tends to 0 otherwise; AT_OR_BELOW keeps nu
    when nu < 0 and tends to 0 otherwise.
    """
    if Direction(direction) is Direction.ABOVE:
        return nu if nu > 0 else 0.0
    return nu if nu < 0 else 0.0


def convergence_table(
    nu: float,
    sigma: float,
    C: float,
    direction: Direction,
    horizons: Sequence[float],
) -> list[ConvergencePoint]:
    """Conditional expectation over a schedule of horizons next to its limit."""
    limit = asymptotic_limit(nu, direction)
    points = []
    for T in horizons:
        result = conditional_nu(ConditionalQuery(nu=nu, sigma=sigma, T=T, C=C, direction=direction))
        points.append(ConvergencePoint(T=T, expectation=result.expectation, limit=limit))
        logger.debug(f"T={T}: expectation={result.expectation:.12g}, limit={limit}")
    return points
