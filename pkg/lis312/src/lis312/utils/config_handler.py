"""
四个 YAML 配置（engine / oracle / cheb / cli）的加载。

每个文件的结构相同：顶层可以有全局字段，`envs` 下按环境分组，
选中的环境覆盖在 `envs.default` 之上：

    envs:
      default:
        enumeration:
          cap: 12
      ci:
        enumeration:
          cap: 9

环境名依次取：参数 env、环境变量 LIS312_ENV、"default"。
"""

from __future__ import annotations

import copy
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml

from lis312.utils.path_tool import get_abs_path


ENV_VAR_NAME = "LIS312_ENV"
DEFAULT_ENV_NAME = "default"


def _read_yaml(relative_path: str, encoding: str) -> Dict[str, Any]:
    path = Path(get_abs_path(relative_path))
    if not path.is_file():
        raise FileNotFoundError(f"找不到配置文件 {path}")
    with path.open(encoding=encoding) as f:
        data = yaml.safe_load(f)
    if data is None:
        return {}
    if not isinstance(data, Mapping):
        raise ValueError(f"{path} 顶层必须是映射，读到的是 {type(data).__name__}")
    return dict(data)


def _deep_merge_dict(base: Dict[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    """把 override 逐层合并进 base（就地修改），两边都是映射的键递归合并。"""
    for key, value in override.items():
        current = base.get(key)
        if isinstance(current, dict) and isinstance(value, Mapping):
            _deep_merge_dict(current, value)
        else:
            base[key] = copy.deepcopy(value)
    return base


def _env_section(envs: Mapping[str, Any], name: str) -> Mapping[str, Any]:
    section = envs.get(name) or {}
    if not isinstance(section, Mapping):
        raise ValueError(f"envs.{name} 必须是映射")
    return section


def _select_env_config(raw_data: Mapping[str, Any], *, env: Optional[str] = None) -> Dict[str, Any]:
    envs = raw_data.get("envs", {})
    if not isinstance(envs, Mapping):
        raise ValueError("envs 必须是映射")
    name = env or os.getenv(ENV_VAR_NAME) or DEFAULT_ENV_NAME
    if name not in envs and name != DEFAULT_ENV_NAME:
        raise KeyError(f"未知的配置环境 {name!r}（可选：{', '.join(sorted(envs))}）")

    merged = copy.deepcopy({k: v for k, v in raw_data.items() if k != "envs"})
    _deep_merge_dict(merged, _env_section(envs, DEFAULT_ENV_NAME))
    if name != DEFAULT_ENV_NAME:
        _deep_merge_dict(merged, _env_section(envs, name))
    return merged


def _load_grouped_env_config(relative_path: str, *, env: Optional[str] = None, encoding: str = "utf-8") -> Dict[str, Any]:
    return _select_env_config(_read_yaml(relative_path, encoding), env=env)




# ---------------------------------------------------------------------------
# 结构化配置模型
# ---------------------------------------------------------------------------


@dataclass
class EngineConfig:
    """
    生成函数引擎配置：
    - series_switch_n: stats 在 n_max 超过该值时改用 q=1 线性递推求矩；
    - warn_pattern_length: 模式长度超过该值时记录 WARNING（计算量增长很快）；
    - memo_enabled: 是否缓存已求出的 F_τ。
    """

    series_switch_n: int = 64
    warn_pattern_length: int = 8
    memo_enabled: bool = True

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "EngineConfig":
        return cls(
            series_switch_n=int(data.get("series_switch_n", cls.series_switch_n)),
            warn_pattern_length=int(data.get("warn_pattern_length", cls.warn_pattern_length)),
            memo_enabled=bool(data.get("memo_enabled", cls.memo_enabled)),
        )


@dataclass
class OracleConfig:
    """
    暴力枚举配置：
    - enumeration_cap: 允许枚举的最大 n；
    - parallel_workers: 进程池大小，0 表示串行。
    """

    enumeration_cap: int = 12
    parallel_workers: int = 0

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "OracleConfig":
        enumeration = data.get("enumeration", {}) or {}
        return cls(
            enumeration_cap=int(enumeration.get("cap", cls.enumeration_cap)),
            parallel_workers=int(enumeration.get("parallel_workers", cls.parallel_workers)),
        )


@dataclass
class ChebConfig:
    """
    Chebyshev / 渐近分析的数值配置：
    - float_precision_bits: mpmath 工作精度；
    - root_width_exponent: 主导根区间宽度 10^-k；
    - product_check_rel_tol_exponent: 乘积恒等式数值校验的相对误差 10^-k。
    """

    float_precision_bits: int = 128
    root_width_exponent: int = 20
    product_check_rel_tol_exponent: int = 30

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ChebConfig":
        return cls(
            float_precision_bits=int(data.get("float_precision_bits", cls.float_precision_bits)),
            root_width_exponent=int(data.get("root_width_exponent", cls.root_width_exponent)),
            product_check_rel_tol_exponent=int(
                data.get("product_check_rel_tol_exponent", cls.product_check_rel_tol_exponent)
            ),
        )

    @property
    def root_width(self) -> Fraction:
        return Fraction(1, 10**self.root_width_exponent)

    @property
    def product_check_rel_tol(self) -> Fraction:
        return Fraction(1, 10**self.product_check_rel_tol_exponent)


@dataclass
class CliConfig:
    decimal_digits: int = 15
    table4_exact_n: int = 10
    slope_digits: int = 12

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CliConfig":
        output = data.get("output", {}) or {}
        return cls(
            decimal_digits=int(output.get("decimal_digits", cls.decimal_digits)),
            table4_exact_n=int(output.get("table4_exact_n", cls.table4_exact_n)),
            slope_digits=int(output.get("slope_digits", cls.slope_digits)),
        )


@dataclass
class AppConfig:
    """聚合所有配置，CLI 入口一次性加载。"""

    engine: EngineConfig = field(default_factory=EngineConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    cheb: ChebConfig = field(default_factory=ChebConfig)
    cli: CliConfig = field(default_factory=CliConfig)


# ---------------------------------------------------------------------------
# 对外加载函数
# ---------------------------------------------------------------------------


def load_engine_config(*, env: Optional[str] = None, encoding: str = "utf-8") -> EngineConfig:
    data = _load_grouped_env_config("config/engine.yml", env=env, encoding=encoding)
    return EngineConfig.from_dict(data.get("engine", {}) or {})


def load_oracle_config(*, env: Optional[str] = None, encoding: str = "utf-8") -> OracleConfig:
    """
    加载暴力枚举配置。

    环境变量 LIS312_ORACLE_CAP（可写在 .env 中）优先于 YAML 中的 cap。
    """
    from lis312.utils.env_override import resolve_enumeration_cap

    data = _load_grouped_env_config("config/oracle.yml", env=env, encoding=encoding)
    config = OracleConfig.from_dict(data)
    config.enumeration_cap = resolve_enumeration_cap(config.enumeration_cap)
    return config


def load_cheb_config(*, env: Optional[str] = None, encoding: str = "utf-8") -> ChebConfig:
    data = _load_grouped_env_config("config/cheb.yml", env=env, encoding=encoding)
    return ChebConfig.from_dict(data.get("numerics", {}) or {})


def load_cli_config(*, env: Optional[str] = None, encoding: str = "utf-8") -> CliConfig:
    data = _load_grouped_env_config("config/cli.yml", env=env, encoding=encoding)
    return CliConfig.from_dict(data)


def load_all_configs(*, env: Optional[str] = None, encoding: str = "utf-8") -> AppConfig:
    return AppConfig(
        engine=load_engine_config(env=env, encoding=encoding),
        oracle=load_oracle_config(env=env, encoding=encoding),
        cheb=load_cheb_config(env=env, encoding=encoding),
        cli=load_cli_config(env=env, encoding=encoding),
    )


__all__ = [
    "ENV_VAR_NAME",
    "DEFAULT_ENV_NAME",
    "EngineConfig",
    "OracleConfig",
    "ChebConfig",
    "CliConfig",
    "AppConfig",
    "load_engine_config",
    "load_oracle_config",
    "load_cheb_config",
    "load_cli_config",
    "load_all_configs",
]


if __name__ == "__main__":
    print(load_all_configs())
