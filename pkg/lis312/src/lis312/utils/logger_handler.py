"""
日志：业务模块统一写 `logger = get_logger(__name__)`。

每个 logger 带两个 handler：
- 控制台（stderr，默认 INFO），stdout 留给命令行的表格 / CSV / JSON；
- 按天轮转的文件（默认 DEBUG），目录为包内 `logs/` 或 `LIS312_LOG_DIR`。

`LIS312_LOG_TO_FILE=0` 时不挂文件 handler。
"""

from __future__ import annotations

import logging
import os
from datetime import datetime
from logging.handlers import TimedRotatingFileHandler
from typing import Optional

from lis312.utils.path_tool import get_abs_path

LOG_DIR_ENV = "LIS312_LOG_DIR"
LOG_TO_FILE_ENV = "LIS312_LOG_TO_FILE"

DEFAULT_LOG_FORMATTER = logging.Formatter(
    "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"
)

_FALSY = frozenset({"0", "false", "no", "off"})


def get_log_root() -> str:
    """当前生效的日志目录，不存在则创建。"""
    root = os.getenv(LOG_DIR_ENV) or get_abs_path("logs")
    os.makedirs(root, exist_ok=True)
    return root


def _file_logging_enabled() -> bool:
    return os.getenv(LOG_TO_FILE_ENV, "1").strip().lower() not in _FALSY


def _resolve_log_file(name: str, log_file: Optional[str]) -> str:
    # 默认文件名形如 lis312.gf.engine_20261019.log
    if log_file is None:
        stem = name.replace(":", "_").replace("/", "_")
        log_file = f"{stem}_{datetime.now():%Y%m%d}.log"
    if os.path.isabs(log_file):
        return log_file
    return os.path.join(get_log_root(), log_file)


def _handler(handler: logging.Handler, level: int) -> logging.Handler:
    handler.setLevel(level)
    handler.setFormatter(DEFAULT_LOG_FORMATTER)
    return handler


def get_logger(
    name: str = __name__,
    console_level: int = logging.INFO,
    file_level: int = logging.DEBUG,
    log_file: Optional[str] = None,
    when: str = "D",
    interval: int = 1,
    backup_count: int = 7,
) -> logging.Logger:
    """
    返回配置好的 logger；同名 logger 只配置一次。

    log_file 为相对路径时放在日志目录下；when / interval / backup_count
    原样交给 TimedRotatingFileHandler。
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    logger.setLevel(logging.DEBUG)
    logger.addHandler(_handler(logging.StreamHandler(), console_level))
    if _file_logging_enabled():
        rotating = TimedRotatingFileHandler(
            filename=_resolve_log_file(name, log_file),
            when=when,
            interval=interval,
            backupCount=backup_count,
            encoding="utf-8",
        )
        logger.addHandler(_handler(rotating, file_level))
    logger.propagate = False
    return logger


def set_console_level(level: int) -> None:
    """调整所有 lis312.* logger 的控制台级别（命令行 --verbose 使用）。"""
    for name, obj in logging.root.manager.loggerDict.items():
        if not name.startswith("lis312") or not isinstance(obj, logging.Logger):
            continue
        for handler in obj.handlers:
            if type(handler) is logging.StreamHandler:
                handler.setLevel(level)


__all__ = ["get_logger", "get_log_root", "set_console_level", "LOG_DIR_ENV", "LOG_TO_FILE_ENV"]


if __name__ == "__main__":
    demo = get_logger("lis312.demo")
    demo.debug("DEBUG 只写文件")
    demo.info(f"日志目录: {get_log_root()}")
