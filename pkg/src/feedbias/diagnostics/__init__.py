"""Autocorrelation, partial autocorrelation and the Ljung-Box test."""

from feedbias.diagnostics.autocorrelation import acf_frame, acf_pacf, format_acf_csv
from feedbias.diagnostics.ljung_box import ljung_box
from feedbias.diagnostics.models import AcfResult, LjungBoxResult, white_noise_band

__all__ = [
    "AcfResult",
    "LjungBoxResult",
    "acf_pacf",
    "ljung_box",
    "white_noise_band",
    "acf_frame",
    "format_acf_csv",
]
