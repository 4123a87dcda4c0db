"""
Unit tests for run configuration models and loaders.
"""

import json
import tempfile
from pathlib import Path

import pytest
from pydantic import ValidationError

from lingam_discovery.config import (
    GeneratorConfig,
    IcaConfig,
    PruneConfig,
    RunConfig,
    SearchConfig,
    load_run_config_from_dict,
    load_run_config_from_file,
    merge_overrides,
)


class TestRunConfigFromYAML:
    """Test loading run configuration from YAML and JSON files."""

    @pytest.fixture
    def config_file(self):
        """Create a temporary YAML config file."""
        content = """
ica:
  contrast: cubic
  restarts: 5
  seed: 42
search:
  row_solver: exhaustive
prune:
  resamples: 200
  z_threshold: 2.5
diagnostics:
"""
        with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
            f.write(content)
            f.flush()
            yield f.name

        # Cleanup
        Path(f.name).unlink()

    def test_load_from_yaml(self, config_file):
        """Test sections given in the file override the defaults."""
        config = load_run_config_from_file(config_file)
        assert config.ica.contrast == "cubic"
        assert config.ica.restarts == 5
        assert config.ica.seed == 42
        assert config.search.row_solver == "exhaustive"
        assert config.prune.resamples == 200
        assert config.prune.z_threshold == 2.5

    def test_missing_and_empty_sections_take_defaults(self, config_file):
        """Test that an empty section and absent sections fall back to defaults."""
        config = load_run_config_from_file(config_file)
        assert config.diagnostics.triangularity_threshold == 0.05
        assert config.diagnostics.independence_threshold == 0.1
        assert config.generator.n == 4
        assert config.experiment.n_values == [3, 5, 8]

    def test_load_from_json(self, tmp_path):
        """Test JSON configs are dispatched on suffix."""
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"ica": {"max_iterations": 50}}), encoding="utf-8")
        config = load_run_config_from_file(path)
        assert config.ica.max_iterations == 50

    def test_missing_file(self, tmp_path):
        """Test a missing config path raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_run_config_from_file(tmp_path / "absent.yaml")

    def test_non_mapping_yaml_rejected(self, tmp_path):
        """Test a YAML document that is not a mapping is rejected."""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_run_config_from_file(path)


class TestConfigValidation:
    """Test field constraints on the config models."""

    def test_defaults(self):
        """Test documented defaults."""
        ica = IcaConfig()
        assert ica.contrast == "logcosh"
        assert ica.max_iterations == 1000
        assert ica.tolerance == 1e-6
        assert SearchConfig().exhaustive_limit == 8
        assert SearchConfig().allow_greedy is False
        assert PruneConfig().resamples == 100
        assert PruneConfig().z_threshold == 2.0

    def test_unknown_keys_rejected(self):
        """Test extra keys are forbidden at every level."""
        with pytest.raises(ValidationError):
            load_run_config_from_dict({"ica": {"contrst": "cubic"}})
        with pytest.raises(ValidationError):
            load_run_config_from_dict({"icaa": {}})

    def test_unknown_contrast_rejected(self):
        """Test only the supported contrast functions are accepted."""
        with pytest.raises(ValidationError):
            IcaConfig(contrast="exp")

    def test_seed_range(self):
        """Test seeds must fit in 64 unsigned bits."""
        IcaConfig(seed=2**64 - 1)
        with pytest.raises(ValidationError):
            IcaConfig(seed=2**64)
        with pytest.raises(ValidationError):
            IcaConfig(seed=-1)

    def test_exhaustive_limit_capped(self):
        """Test the exhaustive search limit cannot exceed 10."""
        with pytest.raises(ValidationError):
            SearchConfig(exhaustive_limit=11)

    def test_prune_needs_two_resamples(self):
        """Test a standard deviation needs at least two resamples."""
        with pytest.raises(ValidationError):
            PruneConfig(resamples=1)

    def test_zero_z_threshold_allowed(self):
        """Test z_threshold 0 (keep every nonzero mean) is valid."""
        assert PruneConfig(z_threshold=0).z_threshold == 0

    def test_exponent_interval_containing_one_rejected(self):
        """Test the generator never draws gaussian disturbances by accident."""
        with pytest.raises(ValidationError):
            GeneratorConfig(exponent_ranges=((0.5, 1.2), (1.5, 2.0)))

    def test_non_positive_coefficient_range_rejected(self):
        """Test coefficient magnitudes must be positive."""
        with pytest.raises(ValidationError):
            GeneratorConfig(coefficient_range=(0.0, 2.0))

    def test_reversed_range_rejected(self):
        """Test ranges must be well-ordered."""
        with pytest.raises(ValidationError):
            GeneratorConfig(disturbance_variance_range=(2.0, 0.5))

    def test_sparsity_levels_in_unit_interval(self):
        """Test experiment sparsity levels are probabilities."""
        with pytest.raises(ValidationError):
            load_run_config_from_dict({"experiment": {"sparsities": [1.5]}})
        with pytest.raises(ValidationError):
            load_run_config_from_dict({"experiment": {"sparsities": []}})


class TestMergeOverrides:
    """Test flag overrides layered over file values."""

    def test_none_keeps_file_value(self):
        """Test that None means 'flag not given'."""
        base = load_run_config_from_dict({"ica": {"restarts": 7}})
        merged = merge_overrides(base, {"ica": {"restarts": None, "seed": 9}})
        assert merged.ica.restarts == 7
        assert merged.ica.seed == 9

    def test_override_replaces_value(self):
        """Test a given flag replaces the file value."""
        base = load_run_config_from_dict({"prune": {"z_threshold": 3.0}})
        merged = merge_overrides(base, {"prune": {"z_threshold": 0.0}})
        assert merged.prune.z_threshold == 0.0

    def test_overrides_are_validated(self):
        """Test an invalid override fails validation."""
        with pytest.raises(ValidationError):
            merge_overrides(RunConfig(), {"ica": {"restarts": 0}})

    def test_unknown_section(self):
        """Test overriding a non-existent section is an error."""
        with pytest.raises(ValueError, match="Unknown config section"):
            merge_overrides(RunConfig(), {"bogus": {"x": 1}})
