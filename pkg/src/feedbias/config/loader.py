"""Config loader for YAML configuration files."""

from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from feedbias.config.models import PipelineConfig
from feedbias.core.errors import ConfigError


class ConfigLoader:
    """Load PipelineConfig from YAML files."""

    @staticmethod
    def load(path: Path | str) -> PipelineConfig:
        """Load configuration from a YAML file.

        An empty file yields the defaults.

        Raises:
            FileNotFoundError: If the file does not exist.
            ConfigError: If the YAML is malformed or fails validation.
        """
        config_path = Path(path)
        if not config_path.is_file():
            raise FileNotFoundError(f"Config file not found: {config_path}")

        try:
            with open(config_path, encoding="utf-8") as f:
                data: Any = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"{config_path}: invalid YAML: {e}") from e
        return ConfigLoader.from_dict(data, source=str(config_path))

    @staticmethod
    def from_dict(data: Any, source: str = "<config>") -> PipelineConfig:
        if not isinstance(data, dict):
            raise ConfigError(f"{source}: expected a mapping of settings, got {type(data).__name__}")
        try:
            return PipelineConfig.model_validate(data)
        except ValidationError as e:
            problems = "; ".join(
                f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
            )
            raise ConfigError(f"{source}: {problems}") from e
