import math

import numpy as np
import pytest

from feedbias.core.errors import InvalidArgumentError
from feedbias.stochastic.estimate import estimate_unconditional, log_returns
from feedbias.stochastic.io import format_price_path_csv
from feedbias.stochastic.models import GbmParams
from feedbias.stochastic.simulate import simulate_gbm, simulate_terminal_log_returns


class TestSimulateGbm:
    """Tests for exact single-path simulation."""

    def test_same_seed_same_path(self, gbm_params):
        """Should serialize byte-identically for identical inputs."""
        first = simulate_gbm(gbm_params, a0=100.0, T=1.0, n=252, seed=42)
        second = simulate_gbm(gbm_params, a0=100.0, T=1.0, n=252, seed=42)
        assert format_price_path_csv(first) == format_price_path_csv(second)

    def test_different_seeds_differ(self, gbm_params):
        """Should draw a different path for a different seed."""
        first = simulate_gbm(gbm_params, a0=100.0, T=1.0, n=10, seed=1)
        second = simulate_gbm(gbm_params, a0=100.0, T=1.0, n=10, seed=2)
        assert not np.array_equal(first.prices, second.prices)

    def test_zero_noise_follows_drift(self, gbm_params):
        """Should end at a0 exp(nu T) when every shock is zero."""
        path = simulate_gbm(gbm_params, a0=100.0, T=1.0, n=252, seed=0, shocks=np.zeros(252))
        assert path.prices[-1] == pytest.approx(100.0 * math.exp(0.055), rel=1e-12)
        assert path.prices.size == 253
        assert path.step_h == pytest.approx(1 / 252)

    def test_shocks_must_match_steps(self, gbm_params):
        """Should reject a shock array of the wrong length."""
        with pytest.raises(InvalidArgumentError):
            simulate_gbm(gbm_params, a0=100.0, T=1.0, n=5, seed=0, shocks=np.zeros(4))

    @pytest.mark.parametrize(("a0", "T", "n"), [(0.0, 1.0, 10), (100.0, 0.0, 10), (100.0, 1.0, 0)])
    def test_rejects_invalid_arguments(self, gbm_params, a0, T, n):
        """Should reject non-positive a0, T or n."""
        with pytest.raises(InvalidArgumentError):
            simulate_gbm(gbm_params, a0=a0, T=T, n=n, seed=0)


class TestTerminalLogReturns:
    """Tests for the batch simulator of terminal log-returns."""

    def test_independent_of_worker_count(self, gbm_params):
        """Should give identical draws for any number of workers."""
        serial = simulate_terminal_log_returns(gbm_params, T=1.0, n=4, paths=70_000, seed=3)
        parallel = simulate_terminal_log_returns(gbm_params, T=1.0, n=4, paths=70_000, seed=3, workers=4)
        assert np.array_equal(serial, parallel)

    @pytest.mark.slow
    def test_terminal_distribution_moments(self, gbm_params):
        """Should have mean nu T within 3 SE and variance sigma^2 T within 5%."""
        totals = simulate_terminal_log_returns(gbm_params, T=1.0, n=252, paths=100_000, seed=42)
        standard_error = 0.3 / math.sqrt(totals.size)
        assert abs(totals.mean() - 0.055) < 3 * standard_error
        assert totals.var(ddof=1) == pytest.approx(0.09, rel=0.05)


@pytest.mark.slow
class TestVarianceConsistency:
    """Tests that sigma2_hat converges as sampling gets finer over a fixed horizon."""

    @staticmethod
    def _mean_abs_error(params: GbmParams, n: int, seeds: int) -> float:
        errors = [
            abs(estimate_unconditional(log_returns(simulate_gbm(params, 100.0, 1.0, n, seed))).sigma2_hat - 0.09)
            for seed in range(seeds)
        ]
        return float(np.mean(errors))

    def test_error_shrinks_with_more_steps(self, gbm_params):
        """Should average below 5% of sigma^2 at n = 10^4 and shrink from n = 250."""
        fine = self._mean_abs_error(gbm_params, 10_000, 200)
        coarse = self._mean_abs_error(gbm_params, 250, 200)
        assert fine < 0.05 * 0.09
        assert fine < coarse

    def test_relative_error_within_five_percent(self, gbm_params):
        """Should land within 5% of 0.09 in at least 99% of 1000 seeds at n = 10^4."""
        hits = 0
        for seed in range(1000):
            path = simulate_gbm(gbm_params, 100.0, 1.0, 10_000, seed)
            sigma2_hat = estimate_unconditional(log_returns(path)).sigma2_hat
            hits += abs(sigma2_hat - 0.09) <= 0.05 * 0.09
        assert hits >= 990
