import logging
from fractions import Fraction

import pytest

from lis312.errors import InvalidInputError
from lis312.utils.config_handler import (
    AppConfig,
    EngineConfig,
    _deep_merge_dict,
    _select_env_config,
    load_all_configs,
    load_cheb_config,
    load_cli_config,
    load_engine_config,
    load_oracle_config,
)
from lis312.utils.logger_handler import get_logger, set_console_level


def test_defaults_match_dataclasses():
    assert load_engine_config() == EngineConfig()
    oracle = load_oracle_config()
    assert oracle.enumeration_cap == 12
    assert oracle.parallel_workers == 0
    assert load_cheb_config().root_width == Fraction(1, 10**20)
    assert load_cli_config().decimal_digits == 15
    assert isinstance(load_all_configs(), AppConfig)


def test_named_environments():
    assert load_engine_config(env="dev").series_switch_n == 16
    assert load_engine_config(env="dev").warn_pattern_length == 8
    ci = load_oracle_config(env="ci")
    assert (ci.enumeration_cap, ci.parallel_workers) == (9, 2)
    assert load_cheb_config(env="prod").root_width == Fraction(1, 10**40)


def test_unknown_environment():
    with pytest.raises(KeyError):
        load_engine_config(env="nosuch")


def test_environment_variable_selects_env(monkeypatch):
    monkeypatch.setenv("LIS312_ENV", "dev")
    assert load_oracle_config().enumeration_cap == 10
    assert load_cli_config().decimal_digits == 8


def test_cap_override(monkeypatch):
    monkeypatch.setenv("LIS312_ORACLE_CAP", "7")
    assert load_oracle_config().enumeration_cap == 7
    for bad in ("abc", "0", "-3"):
        monkeypatch.setenv("LIS312_ORACLE_CAP", bad)
        with pytest.raises(InvalidInputError):
            load_oracle_config()


def test_deep_merge():
    base = {"a": {"b": 1, "c": 2}, "d": 1}
    assert _deep_merge_dict(base, {"a": {"c": 3}, "e": 4}) == {"a": {"b": 1, "c": 3}, "d": 1, "e": 4}


def test_select_env_config():
    raw = {"top": 1, "envs": {"default": {"a": {"b": 1, "c": 2}}, "x": {"a": {"c": 3}}}}
    assert _select_env_config(raw, env="x") == {"top": 1, "a": {"b": 1, "c": 3}}
    assert _select_env_config(raw, env="default") == {"top": 1, "a": {"b": 1, "c": 2}}
    with pytest.raises(ValueError):
        _select_env_config({"envs": []})


def test_logger_without_file_handler():
    logger = get_logger("lis312.tests.logging")
    assert len(logger.handlers) == 1
    assert not logger.propagate
    assert get_logger("lis312.tests.logging") is logger


def test_set_console_level():
    logger = get_logger("lis312.tests.console")
    set_console_level(logging.ERROR)
    try:
        assert logger.handlers[0].level == logging.ERROR
    finally:
        set_console_level(logging.WARNING)


@pytest.mark.parametrize("env", ["default", "dev", "ci", "prod"])
def test_every_environment_loads_all_files(env):
    config = load_all_configs(env=env)
    assert config.engine.series_switch_n > 0
    assert config.oracle.enumeration_cap > 0
