"""
环境变量覆盖工具。

用法示例：

    from lis312.utils.env_override import resolve_enumeration_cap

    cap = resolve_enumeration_cap(12)   # .env 或系统环境中的 LIS312_ORACLE_CAP 优先
"""

from __future__ import annotations

import os
from typing import Final

from dotenv import load_dotenv

from lis312.errors import InvalidInputError
from lis312.utils.logger_handler import get_logger


logger = get_logger(__name__)
_ENV_KEY_CAP: Final[str] = "LIS312_ORACLE_CAP"


def resolve_enumeration_cap(default_cap: int) -> int:
    """返回生效的暴力枚举上限。

    - 先从 `.env` 加载环境变量（不覆盖已有的系统环境变量）；
    - 读取 `LIS312_ORACLE_CAP`，没有则使用 default_cap；
    - 值不是正整数时抛出 InvalidInputError。
    """
    load_dotenv(override=False)

    raw = os.getenv(_ENV_KEY_CAP)
    if raw is None or not raw.strip():
        return default_cap

    try:
        cap = int(raw.strip())
    except ValueError as e:
        logger.error(f"{_ENV_KEY_CAP} 不是整数: {raw!r}")
        raise InvalidInputError(f"{_ENV_KEY_CAP} 必须是正整数，实际为 {raw!r}") from e

    if cap < 1:
        raise InvalidInputError(f"{_ENV_KEY_CAP} 必须是正整数，实际为 {cap}")

    logger.info(f"枚举上限由环境变量覆盖: {default_cap} -> {cap}")
    return cap


__all__ = ["resolve_enumeration_cap"]
