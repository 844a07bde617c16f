"""Conditional expectation of mu_hat over a (mu, C) grid, for plotting."""

import logging
from collections.abc import Sequence

import pandas as pd

from feedbias.conditional.expectation import conditional_mu
from feedbias.conditional.models import ConditionalQuery, SurfaceCell
from feedbias.core.constants import CSV_FLOAT_FORMAT, Direction
from feedbias.core.errors import DegenerateConditionError, InvalidArgumentError
from feedbias.stochastic.models import GbmParams

logger = logging.getLogger(__name__)

SURFACE_COLUMNS = ["mu", "C", "expectation", "bias", "flag"]


def bias_surface(
    mu_grid: Sequence[float],
    C_grid: Sequence[float],
    sigma: float,
    T: float,
    direction: Direction = Direction.ABOVE,
) -> list[SurfaceCell]:
    """Evaluate conditional_mu on the full cartesian grid, mu-major.

    Degenerate cells are flagged and carry NaN instead of failing the grid.
    """
    if not mu_grid or not C_grid:
        raise InvalidArgumentError("mu_grid and C_grid must be non-empty")

    cells = []
    for mu in mu_grid:
        nu = GbmParams(mu=mu, sigma=sigma).nu
        for C in C_grid:
            q = ConditionalQuery(nu=nu, sigma=sigma, T=T, C=C, direction=direction)
            try:
                result = conditional_mu(q)
            except DegenerateConditionError:
                logger.debug(f"Degenerate surface cell mu={mu}, C={C}")
                cells.append(SurfaceCell(mu=mu, C=C, expectation=float("nan"), bias=float("nan"), degenerate=True))
                continue
            cells.append(SurfaceCell(mu=mu, C=C, expectation=result.expectation, bias=result.bias))
    return cells


def surface_frame(cells: Sequence[SurfaceCell]) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "mu": [c.mu for c in cells],
            "C": [c.C for c in cells],
            "expectation": [c.expectation for c in cells],
            "bias": [c.bias for c in cells],
            "flag": [c.flag for c in cells],
        },
        columns=SURFACE_COLUMNS,
    )


def format_surface_csv(cells: Sequence[SurfaceCell]) -> str:
    """CSV ``mu,C,expectation,bias,flag`` with 10 significant digits."""
    return surface_frame(cells).to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
