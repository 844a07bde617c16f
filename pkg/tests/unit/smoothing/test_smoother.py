import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from feedbias.core.errors import InsufficientDataError, InvalidArgumentError
from feedbias.smoothing.models import DEFAULT_ALPHA_GRID, InitPolicy, SmoothingConfig
from feedbias.smoothing.smoother import fit_alpha, smooth, weight_expansion

ALPHAS = [round(0.1 * k, 1) for k in range(11)]
series_values = st.lists(st.floats(-100.0, 100.0), min_size=1, max_size=200)


def _recurrence(y, alpha, first):
    forecasts = [first]
    for value in y:
        forecasts.append(alpha * value + (1 - alpha) * forecasts[-1])
    return forecasts


class TestSmoothingConfig:
    """Tests for smoothing settings."""

    @pytest.mark.parametrize("alpha", [-0.1, 1.1, float("nan")])
    def test_rejects_alpha_outside_unit_interval(self, alpha):
        """Should require 0 <= alpha <= 1."""
        with pytest.raises(InvalidArgumentError):
            SmoothingConfig(alpha=alpha)

    def test_provided_value_needs_value(self):
        """Should require an initial value under the provided-value policy."""
        with pytest.raises(InvalidArgumentError):
            SmoothingConfig(alpha=0.2, init_policy=InitPolicy.PROVIDED_VALUE)

    def test_defaults(self):
        """Should default to alpha = 0.2 starting from the first observation."""
        config = SmoothingConfig()
        assert config.alpha == 0.2
        assert config.init_policy is InitPolicy.FIRST_OBSERVATION

    def test_default_grid(self):
        """Should search 0.05, 0.10, ..., 0.95."""
        assert DEFAULT_ALPHA_GRID[0] == 0.05
        assert DEFAULT_ALPHA_GRID[-1] == 0.95
        assert len(DEFAULT_ALPHA_GRID) == 19


class TestSmooth:
    """Tests for the smoothing recurrence."""

    def test_worked_example(self):
        """Should give F = (10, 10, 10.4, 9.92) for Y = (10, 12, 8) and alpha = 0.2."""
        series = smooth([10.0, 12.0, 8.0], SmoothingConfig(alpha=0.2))
        assert series.forecasts == pytest.approx([10.0, 10.0, 10.4, 9.92], abs=1e-12)
        assert series.one_step_forecast == pytest.approx(9.92)

    def test_alpha_one_copies_last_value(self):
        """Should forecast each next value as the latest observation."""
        y = [3.0, -1.0, 4.0, 1.5]
        series = smooth(y, SmoothingConfig(alpha=1.0))
        assert list(series.forecasts[1:]) == y

    def test_alpha_zero_never_learns(self):
        """Should keep every forecast at F_1."""
        series = smooth([3.0, -1.0, 4.0], SmoothingConfig.provided(alpha=0.0, initial_value=7.0))
        assert list(series.forecasts) == [7.0] * 4

    def test_one_more_forecast_than_observations(self):
        """Should end with the forecast of the next, unseen value."""
        series = smooth([1.0, 2.0, 3.0, 4.0])
        assert series.forecasts.size == series.observations.size + 1

    def test_empty_series(self):
        """Should reject an empty series."""
        with pytest.raises(InsufficientDataError):
            smooth([])

    def test_sum_squared_errors(self):
        """Should sum (Y_k - F_k)^2 over the observations."""
        series = smooth([10.0, 12.0, 8.0], SmoothingConfig(alpha=0.2))
        assert series.sum_squared_errors == pytest.approx(0.0 + 4.0 + 5.76)

    @given(series_values, st.sampled_from(ALPHAS))
    def test_matches_recurrence(self, y, alpha):
        """Should satisfy F_{k+1} = alpha Y_k + (1 - alpha) F_k."""
        series = smooth(y, SmoothingConfig(alpha=alpha))
        assert series.forecasts == pytest.approx(_recurrence(y, alpha, y[0]), abs=1e-9)

    @given(series_values, st.sampled_from(ALPHAS))
    def test_forecasts_are_bounded(self, y, alpha):
        """Should stay inside the range of the observations and F_1."""
        series = smooth(y, SmoothingConfig(alpha=alpha))
        assert series.forecasts.min() >= min(y) - 1e-9
        assert series.forecasts.max() <= max(y) + 1e-9

    @given(series_values, st.sampled_from(ALPHAS), st.floats(-50.0, 50.0))
    def test_shift_equivariance(self, y, alpha, shift):
        """Should shift every forecast by c when the series and F_1 shift by c."""
        base = smooth(y, SmoothingConfig(alpha=alpha))
        shifted = smooth(np.asarray(y) + shift, SmoothingConfig(alpha=alpha))
        assert shifted.forecasts == pytest.approx(base.forecasts + shift, abs=1e-9)


class TestWeightExpansion:
    """Tests for the exponentially decaying weights."""

    def test_alpha_one(self):
        """Should put all weight on the latest observation."""
        assert list(weight_expansion(SmoothingConfig(alpha=1.0), 3)) == [1.0, 0.0, 0.0, 0.0]

    def test_two_steps(self):
        """Should give (0.2, 0.16, 0.64) on (Y_2, Y_1, F_1) for alpha = 0.2."""
        assert weight_expansion(SmoothingConfig(alpha=0.2), 2) == pytest.approx([0.2, 0.16, 0.64])

    def test_requires_positive_t(self):
        """Should reject t < 1."""
        with pytest.raises(InvalidArgumentError):
            weight_expansion(SmoothingConfig(), 0)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_weights_sum_to_one(self, alpha):
        """Should sum to 1 for every horizon up to 100."""
        for t in range(1, 101):
            assert weight_expansion(SmoothingConfig(alpha=alpha), t).sum() == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_agrees_with_recurrence(self, rng, alpha):
        """Should reproduce the recurrence output to 1e-12 on random series."""
        y = rng.normal(0.0, 1.0, size=200)
        config = SmoothingConfig(alpha=alpha)
        forecasts = smooth(y, config).forecasts
        for t in (1, 2, 17, 200):
            history = np.concatenate((y[:t][::-1], [y[0]]))
            assert np.dot(weight_expansion(config, t), history) == pytest.approx(forecasts[t], abs=1e-12)


class TestFitAlpha:
    """Tests for grid search of the smoothing factor."""

    def test_alternating_series_prefers_small_alpha(self):
        """Should pick alpha = 0.1 with SSE 11.051124 for (10, 12, 8, 11, 9)."""
        grid = [round(0.1 * k, 1) for k in range(1, 10)]
        fit = fit_alpha([10.0, 12.0, 8.0, 11.0, 9.0], grid)
        assert fit.alpha == 0.1
        assert fit.sse == pytest.approx(11.051124, abs=1e-9)

    def test_level_shift_prefers_large_alpha(self):
        """Should favour alpha = 0.9 over 0.1 after a single swing."""
        y = [0.0, 0.0, 0.0, 10.0, 10.0, 10.0]
        assert fit_alpha(y, [0.1, 0.9]).alpha == 0.9
        assert fit_alpha(y, [0.9]).sse == pytest.approx(101.01)
        assert fit_alpha(y, [0.1]).sse == pytest.approx(246.61)

    def test_constant_series_ties_to_smallest(self):
        """Should return the smallest grid value when every alpha has SSE 0."""
        fit = fit_alpha([5.0] * 6, [0.7, 0.3, 0.5])
        assert fit.alpha == 0.3
        assert fit.sse == pytest.approx(0.0, abs=1e-20)

    def test_needs_three_observations(self):
        """Should reject series shorter than 3."""
        with pytest.raises(InsufficientDataError):
            fit_alpha([1.0, 2.0])

    def test_rejects_empty_grid(self):
        """Should require at least one candidate."""
        with pytest.raises(InvalidArgumentError):
            fit_alpha([1.0, 2.0, 3.0], [])
