"""Shared fixtures for feedbias tests."""

import numpy as np
import pytest

from feedbias.core.random import make_rng
from feedbias.stochastic.models import GbmParams


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for test data."""
    return make_rng(20190101)


@pytest.fixture
def gbm_params() -> GbmParams:
    """mu = 0.1, sigma = 0.3, so nu = 0.055."""
    return GbmParams(mu=0.1, sigma=0.3)
