import os

import pytest

from src.models.config_model import (
    DEFAULT_CONFIG_PATH,
    KNOWN_KEYS,
    ConfigError,
    ConfigModel,
)
from src.optimizers import Algorithm, ReinitRule
from src.problems import FunctionId


@pytest.fixture
def write_cfg(tmp_path):
    def write(text):
        path = tmp_path / "suite.cfg"
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


def test_default_file_loads():
    config = ConfigModel().load_config()
    assert [v.name for v in config.algorithms] == ["HJ-5", "HJ-9", "MTS-LS1-5", "MTS-LS1-9", "BSrr"]
    assert len(config.functions) == 8
    assert config.dimensions == (20, 40, 80, 160)
    assert config.instances == tuple(range(1, 16))
    assert config.jobs >= 1
    assert config.restart.enabled


def test_default_file_covers_every_key():
    with open(DEFAULT_CONFIG_PATH, encoding="utf-8") as f:
        parsed = ConfigModel.parse_text(f.read())
    assert set(parsed) == set(KNOWN_KEYS)


def test_missing_keys_fall_back_to_defaults(write_cfg):
    config = ConfigModel(config_path=write_cfg("functions = f3\n")).load_config()
    assert config.functions == (FunctionId.F3,)
    assert config.seed == 1
    assert config.budget_multipliers[Algorithm.BSRR] == 1000


def test_overrides_win_over_file(write_cfg):
    path = write_cfg("seed = 5\ndimensions = 20\n")
    config = ConfigModel(config_path=path).load_config(
        {"seed": "9", "dimensions": "2,3", "algorithms": "bsrr", "jobs": "2", "output": None})
    assert config.seed == 9
    assert config.dimensions == (2, 3)
    assert config.algorithms[0].name == "BSrr"
    assert config.jobs == 2
    assert config.output == "results"


def test_budget_for_uses_multipliers(write_cfg):
    path = write_cfg("budget_multiplier_hj = 3\nbudget_multiplier_bsrr = 2\nalgorithms = HJ-5,BSrr\n")
    config = ConfigModel(config_path=path).load_config()
    hj, bsrr = config.algorithms
    assert config.budget_for(hj, 10) == 30
    assert config.budget_for(bsrr, 10) == 20


def test_instance_ranges_and_restart_flags(write_cfg):
    path = write_cfg("instances = 1-3,7\nrestarts = no\nreinit_rule = center\n")
    config = ConfigModel(config_path=path).load_config()
    assert config.instances == (1, 2, 3, 7)
    assert not config.restart.enabled
    assert config.restart.reinit_rule is ReinitRule.CENTER


@pytest.mark.parametrize("text, key", [
    ("dimensions = 0\n", "dimensions"),
    ("dimensions = 20,abc\n", "dimensions"),
    ("instances = 5-2\n", "instances"),
    ("algorithms = nelder-mead\n", "algorithms"),
    ("functions = f7\n", "functions"),
    ("budget_multiplier_hj = 0\n", "budget_multiplier_hj"),
    ("budget_multiplier_bsrr = 1\n", "budget_multiplier_bsrr"),
    ("restarts = maybe\n", "restarts"),
    ("reinit_rule = sideways\n", "reinit_rule"),
    ("colour = blue\n", "colour"),
    ("seed = -1\n", "seed"),
])
def test_invalid_values_name_the_key(write_cfg, text, key):
    with pytest.raises(ConfigError) as excinfo:
        ConfigModel(config_path=write_cfg(text)).load_config()
    assert excinfo.value.key == key


def test_line_without_separator(write_cfg):
    with pytest.raises(ConfigError):
        ConfigModel(config_path=write_cfg("dimensions 20\n")).load_config()


def test_missing_explicit_file_is_io_error(tmp_path):
    with pytest.raises(OSError):
        ConfigModel(config_path=str(tmp_path / "nope.cfg")).load_config()


def test_describe_is_serializable():
    description = ConfigModel().load_config({"functions": "f1,f5"}).describe()
    assert description["functions"] == ["f1", "f5"]
    assert description["budget_multipliers"] == {"HJ": 10000, "MTSLS1": 10000, "BSRR": 1000}
    assert os.path.basename(DEFAULT_CONFIG_PATH) == "suite.cfg"


def test_completed_keys_are_warned(write_cfg, recording_logger):
    path = write_cfg("functions = f1\nseed = 2\n")
    ConfigModel(recording_logger, path).load_config()
    warnings = recording_logger.messages("warning")
    assert len(warnings) == len(KNOWN_KEYS) - 2
    assert any("'dimensions'" in message for message in warnings)
    assert not any("'seed'" in message for message in warnings)
