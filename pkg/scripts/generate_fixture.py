#!/usr/bin/env python3
"""Generate the synthetic portfolio fixture consumed by ``feedbias pipeline``.

The fixture is a set of stocks whose drift falls short of the previous
year's level by an autocorrelated margin, so the raw conditional forecasts
carry a persistent bias that the simple and smoothed adjustments remove.

Usage:
    uv run python scripts/generate_fixture.py --out fixtures/synthetic
    uv run python scripts/generate_fixture.py --out /tmp/fx --stocks 30 --seed 7

Output:
    - <out>/prices.csv (stock_id,date,close)
    - <out>/capm.csv (stock_id,year,beta,risk_free,market_return_expectation)
    - <out>/config.yaml
"""

import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from feedbias.pipeline.synthetic import SyntheticPortfolio, write_fixture  # noqa: E402


def main(out: Path, seed: int = 2019, stocks: int = 10, periods: int = 10) -> int:
    """Write the fixture files.

    Returns:
        Exit code (0 for success)
    """
    shape = SyntheticPortfolio(n_stocks=stocks, n_periods=periods)
    paths = write_fixture(out, seed=seed, shape=shape)
    for name, path in paths.items():
        print(f"      {name}: {path}")
    print(f"Fixture with {stocks} stocks, {periods} years + holdout, seed {seed}")
    return 0


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Generate the synthetic portfolio fixture")
    parser.add_argument("--out", type=Path, default=Path("fixtures/synthetic"), help="Output directory")
    parser.add_argument("--seed", type=int, default=2019, help="Random seed (default: 2019)")
    parser.add_argument("--stocks", type=int, default=10, help="Number of stocks (default: 10)")
    parser.add_argument("--periods", type=int, default=10, help="In-sample years (default: 10)")
    args = parser.parse_args()

    sys.exit(main(out=args.out, seed=args.seed, stocks=args.stocks, periods=args.periods))
