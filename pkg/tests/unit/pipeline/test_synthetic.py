import statistics

import numpy as np
import pytest

from feedbias.config.loader import ConfigLoader
from feedbias.core.random import make_rng
from feedbias.pipeline.ingest import ingest
from feedbias.pipeline.records import build_period_records
from feedbias.pipeline.report import run_portfolio
from feedbias.pipeline.synthetic import (
    SyntheticPortfolio,
    bias_margins,
    synthetic_drifts,
    synthetic_portfolio,
    write_fixture,
)

SMALL = SyntheticPortfolio(n_stocks=3, n_periods=4)


class TestSyntheticPortfolio:
    """Tests for the generated bias-prone portfolio."""

    def test_shape(self):
        """Should give n_stocks datasets of n_periods plus a holdout year."""
        datasets = synthetic_portfolio(5, SMALL)
        assert [d.stock_id for d in datasets] == ["S001", "S002", "S003"]
        for dataset in datasets:
            assert dataset.n_periods == 5
            assert [p.label for p in dataset.periods] == [2009, 2010, 2011, 2012, 2013]
            assert all(p.path.n_steps == 252 for p in dataset.periods)
            assert all(p.capm is not None for p in dataset.periods)

    def test_periods_are_anchored(self):
        """Should start each period at the previous period's last price."""
        dataset = synthetic_portfolio(5, SMALL)[0]
        for previous, current in zip(dataset.periods, dataset.periods[1:], strict=False):
            assert current.path.prices[0] == previous.path.prices[-1]

    def test_deterministic(self):
        """Should reproduce the same prices for the same seed."""
        first = synthetic_portfolio(11, SMALL)
        second = synthetic_portfolio(11, SMALL)
        for a, b in zip(first, second, strict=True):
            for pa, pb in zip(a.periods, b.periods, strict=True):
                np.testing.assert_array_equal(pa.path.prices, pb.path.prices)

    def test_stock_streams_are_independent_of_count(self):
        """Should draw stock k from its own substream regardless of the portfolio size."""
        small = synthetic_portfolio(11, SMALL)
        large = synthetic_portfolio(11, SyntheticPortfolio(n_stocks=6, n_periods=4))
        np.testing.assert_array_equal(small[2].periods[-1].path.prices, large[2].periods[-1].path.prices)

    def test_bias_margins_persist(self):
        """Should keep AR(1) margins close to their mean."""
        margins = bias_margins(make_rng(3), 0.05, 500)
        assert margins.mean() == pytest.approx(0.05, abs=0.005)
        assert np.corrcoef(margins[:-1], margins[1:])[0, 1] > 0.7

    def test_drifts_fall_by_the_margins(self):
        """Should lower the drift by kappa_i into period i and end at the final drift."""
        margins = np.array([0.5, 0.1, 0.2, 0.3])
        np.testing.assert_allclose(synthetic_drifts(-0.05, margins), [0.55, 0.45, 0.25, -0.05])


class TestSyntheticGating:
    """Tests for how the generated benchmarks gate investment."""

    @pytest.fixture(scope="class")
    def portfolio_records(self):
        return [build_period_records(d) for d in synthetic_portfolio(5, SyntheticPortfolio(holdout=False))]

    def test_some_periods_miss_the_benchmark(self, portfolio_records):
        """Should leave a minority of periods uninvested after a miss."""
        later = [r for records in portfolio_records for r in records[1:]]
        uninvested = sum(not r.invested for r in later)
        assert 0 < uninvested < 0.5 * len(later)

    def test_conditional_premium_is_material(self, portfolio_records):
        """Should forecast above the plain drift estimate after every win."""
        premiums = [r.forward_forecast - r.nu_hat for records in portfolio_records for r in records if r.outperformed]
        assert all(p > 0.0 for p in premiums)
        assert statistics.mean(premiums) > 0.002

    def test_invested_forecasts_are_optimistic(self, portfolio_records):
        """Should overshoot the realized drift on average when invested."""
        biases = [r.bias for records in portfolio_records for r in records if r.invested]
        assert statistics.mean(biases) > 0.05


class TestWriteFixture:
    """Tests for the on-disk fixture."""

    def test_round_trip_through_ingest(self, tmp_path):
        """Should write files that ingest back into the generated prices."""
        paths = write_fixture(tmp_path, seed=5, shape=SMALL)
        config = ConfigLoader.load(paths["config"])
        datasets = ingest(paths["prices"], paths["capm"], config)
        expected = synthetic_portfolio(5, SMALL)

        assert [d.stock_id for d in datasets] == [d.stock_id for d in expected]
        for got, want in zip(datasets, expected, strict=True):
            assert got.n_periods == want.n_periods
            # The first year has no anchor price on disk.
            np.testing.assert_allclose(got.periods[0].path.prices, want.periods[0].path.prices[1:], rtol=1e-9)
            np.testing.assert_allclose(got.periods[-1].path.prices, want.periods[-1].path.prices, rtol=1e-9)
            assert got.periods[1].capm.beta == pytest.approx(want.periods[1].capm.beta, rel=1e-9)
            assert got.periods[1].capm.risk_free == pytest.approx(want.periods[1].capm.risk_free, rel=1e-9)

    def test_fixture_scores(self, tmp_path):
        """Should run the whole portfolio on the written fixture."""
        paths = write_fixture(tmp_path, seed=5, shape=SMALL)
        config = ConfigLoader.load(paths["config"])
        portfolio = run_portfolio(ingest(paths["prices"], paths["capm"], config), config)
        assert len(portfolio.reports) == 3


@pytest.mark.slow
class TestAdjustmentStudy:
    """Repeated synthetic portfolios under persistent bias."""

    def test_adjustments_reduce_holdout_deviation(self):
        """Should beat the raw forecast with ES in most portfolios and order the medians."""
        totals = []
        for seed in range(200):
            portfolio = run_portfolio(synthetic_portfolio(seed))
            totals.append((portfolio.total_sd_raw, portfolio.total_sd_simple, portfolio.total_sd_es))

        es_wins = sum(es < raw for raw, _, es in totals)
        assert es_wins >= 0.8 * len(totals)
        raw_median = statistics.median(t[0] for t in totals)
        simple_median = statistics.median(t[1] for t in totals)
        es_median = statistics.median(t[2] for t in totals)
        assert es_median < simple_median < raw_median
