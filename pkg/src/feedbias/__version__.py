"""Installed distribution version, ``0.0.0-dev`` when running from a checkout."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("feedbias")
except PackageNotFoundError:
    __version__ = "0.0.0-dev"
