"""Exact simulation of geometric Brownian motion.

Uses the closed-form update A_{t+h} = A_t exp(nu h + sigma sqrt(h) xi), so
sampled paths carry no discretization bias.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import numpy.typing as npt

from feedbias.core.errors import InvalidArgumentError
from feedbias.core.random import block_rng, iter_blocks, make_rng
from feedbias.stochastic.models import FloatArray, GbmParams, PricePath, require_positive

logger = logging.getLogger(__name__)

# Cap on normals held in memory at once by the ensemble simulator.
_MAX_CHUNK_DRAWS = 4_000_000


def _require_steps(n: int) -> None:
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")


def simulate_gbm(
    params: GbmParams,
    a0: float,
    T: float,
    n: int,
    seed: int,
    shocks: npt.ArrayLike | None = None,
) -> PricePath:
    """Simulate one price path of n steps over [0, T].

    Args:
        params: Drift and volatility.
        a0: Initial price.
        T: Horizon in years.
        n: Number of steps; the path holds n + 1 prices.
        seed: Seed of the PCG64 stream that supplies the standard normals.
        shocks: Explicit standard-normal shocks of length n, replacing the
            seeded stream.

    Returns:
        PricePath with step T / n.
    """
    require_positive("a0", a0)
    require_positive("T", T)
    _require_steps(n)

    h = T / n
    if shocks is None:
        xi = make_rng(seed).standard_normal(n)
    else:
        xi = np.asarray(shocks, dtype=np.float64)
        if xi.shape != (n,):
            raise InvalidArgumentError(f"shocks must have shape ({n},), got {xi.shape}")

    increments = params.nu * h + params.sigma * math.sqrt(h) * xi
    log_prices = math.log(a0) + np.concatenate(([0.0], np.cumsum(increments)))
    return PricePath(prices=np.exp(log_prices), step_h=h)


def _terminal_block(params: GbmParams, T: float, n: int, seed: int, block: int, size: int) -> FloatArray:
    rng = block_rng(seed, block)
    h = T / n
    totals = np.zeros(size)
    rows = max(1, _MAX_CHUNK_DRAWS // n)
    for start in range(0, size, rows):
        count = min(rows, size - start)
        xi = rng.standard_normal((count, n))
        totals[start : start + count] = np.sum(params.nu * h + params.sigma * math.sqrt(h) * xi, axis=1)
    return totals


def simulate_terminal_log_returns(
    params: GbmParams,
    T: float,
    n: int,
    paths: int,
    seed: int,
    workers: int = 1,
) -> FloatArray:
    """Terminal log-returns Z_T - Z_0 of ``paths`` exact n-step paths.

    Paths are grouped in fixed-size blocks with independent substreams, so the
    result is identical for any ``workers``.
    """
    require_positive("T", T)
    _require_steps(n)
    if paths < 1:
        raise InvalidArgumentError(f"paths must be >= 1, got {paths}")

    blocks = list(iter_blocks(paths))
    logger.debug(f"Simulating {paths} paths of {n} steps in {len(blocks)} blocks")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(lambda b: _terminal_block(params, T, n, seed, b[0], b[1]), blocks)
            )
    else:
        parts = [_terminal_block(params, T, n, seed, block, size) for block, size in blocks]
    return np.concatenate(parts)
