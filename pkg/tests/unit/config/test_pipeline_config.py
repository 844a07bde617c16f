import pytest

from feedbias.config.loader import ConfigLoader
from feedbias.config.models import BenchmarkMode, EsTarget, PipelineConfig
from feedbias.core.errors import ConfigError


class TestPipelineConfig:
    """Tests for pipeline settings."""

    def test_defaults(self):
        """Should default to per-period CAPM, alpha 0.2, daily steps and a holdout year."""
        config = PipelineConfig()
        assert config.alpha == 0.2
        assert not config.fit_alpha
        assert config.h_per_year == 252
        assert config.step_h == pytest.approx(1 / 252)
        assert config.period_length == 1.0
        assert config.benchmark_mode is BenchmarkMode.PER_PERIOD
        assert config.es_target is EsTarget.BIAS
        assert config.holdout
        assert config.diagnostic_lags == 3


class TestConfigLoader:
    """Tests for loading settings from YAML."""

    def test_load_yaml(self, tmp_path):
        """Should parse every supported key."""
        path = tmp_path / "config.yaml"
        path.write_text(
            "alpha: 0.5\n"
            "fit_alpha: true\n"
            "alpha_grid: [0.1, 0.9]\n"
            "h_per_year: 250\n"
            "benchmark_mode: constant\n"
            "constant_c: 0.05\n"
            "es_target: forecast\n"
        )
        config = ConfigLoader.load(path)
        assert config.alpha == 0.5
        assert config.fit_alpha
        assert config.alpha_grid == (0.1, 0.9)
        assert config.h_per_year == 250
        assert config.benchmark_mode is BenchmarkMode.CONSTANT
        assert config.constant_c == 0.05
        assert config.es_target is EsTarget.FORECAST

    def test_empty_file_gives_defaults(self, tmp_path):
        """Should treat an empty file as all defaults."""
        path = tmp_path / "config.yaml"
        path.write_text("")
        assert ConfigLoader.load(path) == PipelineConfig()

    def test_missing_file(self, tmp_path):
        """Should raise FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            ConfigLoader.load(tmp_path / "missing.yaml")

    def test_invalid_yaml(self, tmp_path):
        """Should wrap YAML syntax errors in ConfigError."""
        path = tmp_path / "config.yaml"
        path.write_text("alpha: [0.2\n")
        with pytest.raises(ConfigError, match="invalid YAML"):
            ConfigLoader.load(path)

    def test_unknown_key(self, tmp_path):
        """Should reject keys the pipeline does not know."""
        path = tmp_path / "config.yaml"
        path.write_text("alpah: 0.3\n")
        with pytest.raises(ConfigError, match="alpah"):
            ConfigLoader.load(path)

    @pytest.mark.parametrize(
        "text",
        ["alpha: 1.5\n", "h_per_year: 0\n", "alpha_grid: [0.2, 2.0]\n", "alpha_grid: []\n", "benchmark_mode: weekly\n"],
    )
    def test_invalid_values(self, tmp_path, text):
        """Should reject out-of-range values."""
        path = tmp_path / "config.yaml"
        path.write_text(text)
        with pytest.raises(ConfigError):
            ConfigLoader.load(path)

    def test_constant_mode_needs_c(self):
        """Should require constant_c in constant mode."""
        with pytest.raises(ConfigError, match="constant_c"):
            ConfigLoader.from_dict({"benchmark_mode": "constant"})

    def test_top_level_must_be_mapping(self):
        """Should reject a YAML list."""
        with pytest.raises(ConfigError, match="mapping"):
            ConfigLoader.from_dict([1, 2])
