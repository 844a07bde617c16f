"""CSV form of a price path: header ``date_index,price``."""

from pathlib import Path

import pandas as pd

from feedbias.core.errors import DataParseError
from feedbias.stochastic.models import PricePath

PRICE_COLUMNS = ["date_index", "price"]


def price_path_frame(path: PricePath) -> pd.DataFrame:
    """Tabular view of a path, one row per sampling time."""
    return pd.DataFrame({"date_index": range(path.prices.size), "price": path.prices})


def format_price_path_csv(path: PricePath) -> str:
    """Serialize a path; full float precision keeps round trips exact."""
    return price_path_frame(path).to_csv(index=False, float_format="%.17g", lineterminator="\n")


def read_price_path_csv(source: Path | str, step_h: float) -> PricePath:
    """Read a ``date_index,price`` file into a PricePath with step ``step_h``."""
    label = str(source)
    try:
        frame = pd.read_csv(source)
    except pd.errors.EmptyDataError as e:
        raise DataParseError(label, "file is empty") from e
    except pd.errors.ParserError as e:
        raise DataParseError(label, f"malformed CSV: {e}") from e

    if list(frame.columns) != PRICE_COLUMNS:
        raise DataParseError(label, f"expected header {','.join(PRICE_COLUMNS)}", line=1)

    prices = pd.to_numeric(frame["price"], errors="coerce")
    for position, (value, parsed) in enumerate(zip(frame["price"], prices, strict=True)):
        line = position + 2
        if pd.isna(parsed):
            raise DataParseError(label, f"price {value!r} is not a number", line=line, column="price")
        if parsed <= 0:
            raise DataParseError(label, "prices must be strictly positive", line=line, column="price")
    return PricePath(prices=prices.to_numpy(), step_h=step_h)
