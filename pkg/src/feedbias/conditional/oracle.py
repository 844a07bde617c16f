"""Independent evaluations of the conditional expectation used as test oracles.

``monte_carlo_conditional`` samples R_T ~ N(nu T, sigma^2 T) and averages
R_T / T over the draws that satisfy the condition. ``integral_conditional_nu``
evaluates the integral expression of the conditional expectation by adaptive
quadrature instead of the inverse Mills ratio.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy import integrate

from feedbias.conditional.expectation import tail_probability
from feedbias.conditional.models import ConditionalQuery, MonteCarloEstimate
from feedbias.core.constants import Direction
from feedbias.core.errors import DegenerateConditionError, InvalidArgumentError
from feedbias.core.random import block_rng, iter_blocks

logger = logging.getLogger(__name__)

MIN_PATHS = 1_000


def _block_moments(q: ConditionalQuery, seed: int, block: int, size: int) -> tuple[int, float, float]:
    rng = block_rng(seed, block)
    totals = q.nu * q.T + q.sigma * math.sqrt(q.T) * rng.standard_normal(size)
    if q.direction is Direction.ABOVE:
        kept = totals[totals > q.C]
    else:
        kept = totals[totals <= q.C]
    estimates = kept / q.T
    return int(estimates.size), float(np.sum(estimates)), float(np.sum(estimates**2))


def monte_carlo_conditional(
    q: ConditionalQuery,
    paths: int,
    seed: int,
    workers: int = 1,
) -> MonteCarloEstimate:
    """Brute-force E[R_T / T | condition] from ``paths`` simulated totals.

    Raises:
        InvalidArgumentError: If fewer than 1000 paths are requested.
        DegenerateConditionError: If no simulated total satisfies the condition.
    """
    if paths < MIN_PATHS:
        raise InvalidArgumentError(f"paths must be >= {MIN_PATHS}, got {paths}")

    blocks = list(iter_blocks(paths))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            moments = list(pool.map(lambda b: _block_moments(q, seed, b[0], b[1]), blocks))
    else:
        moments = [_block_moments(q, seed, block, size) for block, size in blocks]

    retained = sum(m[0] for m in moments)
    if retained == 0:
        raise DegenerateConditionError(q.direction.event, f"0 of {paths} simulated paths retained")

    total = math.fsum(m[1] for m in moments)
    total_sq = math.fsum(m[2] for m in moments)
    mean = total / retained
    if retained > 1:
        variance = max(total_sq - retained * mean**2, 0.0) / (retained - 1)
        std_error = math.sqrt(variance / retained)
    else:
        std_error = math.inf
    logger.debug(f"Monte Carlo {q}: retained {retained}/{paths}, mean={mean:.6g} +/- {std_error:.2g}")
    return MonteCarloEstimate(mean=mean, std_error=std_error, retained=retained, paths=paths)


def _density_integral(q: ConditionalQuery) -> float:
    """Integral of exp(-(y - nu T)^2 / (2 sigma^2 T)) over the conditioning set."""
    centre = q.nu * q.T
    width = 2 * q.sigma**2 * q.T

    def kernel(y: float) -> float:
        return math.exp(-((y - centre) ** 2) / width)

    options = {"epsabs": 0.0, "epsrel": 1e-11, "limit": 200}
    # Split at the peak so the unbounded piece is monotone.
    if q.direction is Direction.ABOVE:
        if q.C < centre:
            head, _ = integrate.quad(kernel, q.C, centre, **options)
            tail, _ = integrate.quad(kernel, centre, math.inf, **options)
            return head + tail
        value, _ = integrate.quad(kernel, q.C, math.inf, **options)
        return value
    if q.C > centre:
        head, _ = integrate.quad(kernel, centre, q.C, **options)
        tail, _ = integrate.quad(kernel, -math.inf, centre, **options)
        return head + tail
    value, _ = integrate.quad(kernel, -math.inf, q.C, **options)
    return value


def integral_conditional_nu(q: ConditionalQuery) -> float:
    """Conditional expectation of nu_hat from its integral representation.

    E = (2 pi T)^(-1/2) / P * [ +/- sigma exp(-d^2 / 2) + (nu / sigma) * I ]

    where I integrates the unnormalised density of R_T over the conditioning
    set and the sign is + for ABOVE, - for AT_OR_BELOW.
    """
    probability = tail_probability(q)
    if probability <= 0.0:
        raise DegenerateConditionError(q.direction.event)

    d = q.mills_argument
    boundary = q.sigma * math.exp(-(d**2) / 2)
    if q.direction is Direction.AT_OR_BELOW:
        boundary = -boundary
    bracket = boundary + (q.nu / q.sigma) * _density_integral(q)
    return bracket / (probability * math.sqrt(2 * math.pi * q.T))
