"""Integration test configuration.

Provides an on-disk synthetic portfolio shared by the end-to-end tests.
"""

import pytest

from feedbias.pipeline.synthetic import SyntheticPortfolio, write_fixture

FIXTURE_SEED = 2019


@pytest.fixture(scope="module")
def portfolio_files(tmp_path_factory):
    """prices.csv, capm.csv and config.yaml for 30 stocks over 10 years plus a holdout year."""
    return write_fixture(
        tmp_path_factory.mktemp("portfolio"),
        seed=FIXTURE_SEED,
        shape=SyntheticPortfolio(n_stocks=30, n_periods=10),
    )
