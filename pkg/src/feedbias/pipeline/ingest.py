"""Loading of the price and CAPM tables into per-stock datasets.

Prices: ``stock_id,date,close`` with ISO-8601 dates, sorted by (stock_id,
date). CAPM: ``stock_id,year,beta,risk_free,market_return_expectation``.
Periods are calendar years; each period's path is anchored at the previous
year's last close so consecutive periods share an endpoint.
"""

import logging
from pathlib import Path

import numpy as np
import numpy.typing as npt
import pandas as pd

from feedbias.config.models import BenchmarkMode, PipelineConfig
from feedbias.core.errors import DataError, DataParseError, InsufficientDataError
from feedbias.pipeline.models import CapmInputs, PeriodData, StockDataset
from feedbias.stochastic.models import PricePath

logger = logging.getLogger(__name__)

PRICE_COLUMNS = ["stock_id", "date", "close"]
CAPM_COLUMNS = ["stock_id", "year", "beta", "risk_free", "market_return_expectation"]
# Each period needs 2 returns; the first year has no anchor close to supply one.
MIN_RETURNS_PER_PERIOD = 2

CapmTable = dict[tuple[str, int], CapmInputs]


def _read_table(source: Path | str, columns: list[str]) -> pd.DataFrame:
    label = str(source)
    try:
        frame = pd.read_csv(source, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError as e:
        raise DataParseError(label, "file is empty") from e
    except pd.errors.ParserError as e:
        raise DataParseError(label, f"malformed CSV: {e}") from e
    if list(frame.columns) != columns:
        raise DataParseError(label, f"expected header {','.join(columns)}", line=1)
    return frame


def _first(mask: pd.Series | npt.NDArray[np.bool_]) -> int | None:
    """Row position of the first True in ``mask``."""
    positions = np.flatnonzero(np.asarray(mask, dtype=bool))
    return int(positions[0]) if positions.size else None


def _line(position: int) -> int:
    # Header is line 1.
    return position + 2


def _require_ids(label: str, frame: pd.DataFrame) -> pd.Series:
    ids = frame["stock_id"].str.strip()
    bad = _first(ids == "")
    if bad is not None:
        raise DataParseError(label, "stock_id is empty", line=_line(bad), column="stock_id")
    return ids


def _parse_numeric(label: str, frame: pd.DataFrame, column: str) -> pd.Series:
    values = pd.to_numeric(frame[column], errors="coerce")
    bad = _first(~np.isfinite(values.to_numpy(dtype=np.float64)))
    if bad is not None:
        raise DataParseError(
            label, f"{frame[column].iloc[bad]!r} is not a finite number", line=_line(bad), column=column
        )
    return values.astype(np.float64)


def read_prices(source: Path | str) -> pd.DataFrame:
    """Validated price table with parsed ``date`` and ``close`` columns.

    Raises:
        DataParseError: On an empty file, wrong header, unparseable or
            non-positive values, or rows out of (stock_id, date) order.
    """
    label = str(source)
    frame = _read_table(source, PRICE_COLUMNS)
    if frame.empty:
        raise DataParseError(label, "file has no price rows")

    ids = _require_ids(label, frame)
    dates = pd.to_datetime(frame["date"].str.strip(), format="%Y-%m-%d", errors="coerce")
    bad = _first(dates.isna())
    if bad is not None:
        raise DataParseError(
            label, f"date {frame['date'].iloc[bad]!r} is not ISO-8601 (YYYY-MM-DD)", line=_line(bad), column="date"
        )
    closes = _parse_numeric(label, frame, "close")
    bad = _first(closes <= 0)
    if bad is not None:
        raise DataParseError(
            label, f"close {closes.iloc[bad]!r} violates price positivity (must be > 0)", line=_line(bad), column="close"
        )

    previous_ids = ids.shift()
    previous_dates = dates.shift()
    same_stock = ids == previous_ids
    bad = _first(ids < previous_ids.fillna(""))
    if bad is not None:
        raise DataParseError(label, "rows are not sorted by stock_id", line=_line(bad), column="stock_id")
    bad = _first(same_stock & (dates == previous_dates))
    if bad is not None:
        raise DataParseError(label, "duplicate date for stock", line=_line(bad), column="date")
    bad = _first(same_stock & (dates < previous_dates))
    if bad is not None:
        raise DataParseError(label, "rows are not sorted by date", line=_line(bad), column="date")

    return pd.DataFrame({"stock_id": ids, "date": dates, "close": closes})


def read_capm(source: Path | str) -> CapmTable:
    """CAPM inputs keyed by (stock_id, year)."""
    label = str(source)
    frame = _read_table(source, CAPM_COLUMNS)
    ids = _require_ids(label, frame)
    years = pd.to_numeric(frame["year"], errors="coerce")
    bad = _first(years.isna() | (years != years.round()))
    if bad is not None:
        raise DataParseError(label, f"year {frame['year'].iloc[bad]!r} is not an integer", line=_line(bad), column="year")
    values = {column: _parse_numeric(label, frame, column) for column in CAPM_COLUMNS[2:]}

    table: CapmTable = {}
    for position, (stock_id, year) in enumerate(zip(ids, years.astype(int), strict=True)):
        key = (stock_id, int(year))
        if key in table:
            raise DataParseError(label, f"duplicate CAPM row for {stock_id} {year}", line=_line(position))
        table[key] = CapmInputs(
            beta=float(values["beta"].iloc[position]),
            risk_free=float(values["risk_free"].iloc[position]),
            market_return_expectation=float(values["market_return_expectation"].iloc[position]),
        )
    return table


def _stock_dataset(stock_id: str, rows: pd.DataFrame, capm: CapmTable, config: PipelineConfig) -> StockDataset:
    periods: list[PeriodData] = []
    anchor: float | None = None
    for year, year_rows in rows.groupby(rows["date"].dt.year, sort=True):
        closes = year_rows["close"].to_numpy()
        needed = MIN_RETURNS_PER_PERIOD + (1 if anchor is None else 0)
        if closes.size < needed:
            raise DataError(
                f"stock {stock_id}: year {year} has {closes.size} observation(s), need at least {needed}"
            )
        prices = closes if anchor is None else np.concatenate(([anchor], closes))
        periods.append(
            PeriodData(label=int(year), path=PricePath(prices=prices, step_h=config.step_h), capm=capm.get((stock_id, int(year))))
        )
        anchor = float(closes[-1])
    return StockDataset(stock_id=stock_id, periods=tuple(periods))


def _check_capm_coverage(dataset: StockDataset, capm: CapmTable, config: PipelineConfig) -> None:
    if config.benchmark_mode is not BenchmarkMode.PER_PERIOD:
        return
    if not any(key[0] == dataset.stock_id for key in capm):
        raise DataError(f"stock {dataset.stock_id} is missing from the CAPM table")
    # The holdout year is only forecast, never gated, so it needs no benchmark.
    gated = dataset.periods[:-1] if config.holdout else dataset.periods
    missing = [p.label for p in gated if p.capm is None]
    if missing:
        raise DataError(f"stock {dataset.stock_id}: no CAPM inputs for year(s) {', '.join(map(str, missing))}")


def ingest(
    prices_path: Path | str,
    capm_path: Path | str | None,
    config: PipelineConfig | None = None,
) -> list[StockDataset]:
    """Build one validated dataset per stock, sorted by stock id.

    ``capm_path`` may be None only in constant benchmark mode.
    """
    config = config or PipelineConfig()
    prices = read_prices(prices_path)
    if capm_path is None:
        if config.benchmark_mode is BenchmarkMode.PER_PERIOD:
            raise DataError("per_period benchmark mode needs a CAPM table")
        capm: CapmTable = {}
    else:
        capm = read_capm(capm_path)

    datasets = []
    for stock_id, rows in prices.groupby("stock_id", sort=True):
        dataset = _stock_dataset(str(stock_id), rows, capm, config)
        _check_capm_coverage(dataset, capm, config)
        datasets.append(dataset)
    logger.info(f"Ingested {len(datasets)} stocks from {prices_path}")
    return datasets


def split_holdout(dataset: StockDataset) -> tuple[StockDataset, PricePath]:
    """Separate the last period as the out-of-sample holdout path."""
    if dataset.n_periods < 2:
        raise InsufficientDataError(f"stock {dataset.stock_id}: need a history period before the holdout")
    history = StockDataset(stock_id=dataset.stock_id, periods=dataset.periods[:-1])
    return history, dataset.periods[-1].path
