"""Readers for the single-column ``value`` CSV files used by smooth and diagnose."""

from pathlib import Path

import numpy as np
import pandas as pd

from feedbias.core.errors import DataParseError
from feedbias.stochastic.models import FloatArray

VALUE_COLUMN = "value"


def read_value_csv(source: Path | str) -> FloatArray:
    """Values of the ``value`` column, in file order."""
    label = str(source)
    try:
        frame = pd.read_csv(source, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError as e:
        raise DataParseError(label, "file is empty") from e
    except pd.errors.ParserError as e:
        raise DataParseError(label, f"malformed CSV: {e}") from e

    if list(frame.columns) != [VALUE_COLUMN]:
        raise DataParseError(label, f"expected header {VALUE_COLUMN}", line=1)
    values = pd.to_numeric(frame[VALUE_COLUMN], errors="coerce").to_numpy(dtype=np.float64)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        position = int(bad[0])
        raise DataParseError(
            label,
            f"{frame[VALUE_COLUMN].iloc[position]!r} is not a finite number",
            line=position + 2,
            column=VALUE_COLUMN,
        )
    return values
