"""Feedbias - conditional drift estimates of positive-feedback traders."""

from feedbias.__version__ import __version__

__all__ = ["__version__"]
