"""Configuration module for feedbias."""

from feedbias.config.loader import ConfigLoader
from feedbias.config.models import BenchmarkMode, EsTarget, PipelineConfig

__all__ = ["PipelineConfig", "BenchmarkMode", "EsTarget", "ConfigLoader"]
