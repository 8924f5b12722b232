"""
lis312 命令行入口。

在 ``lis312/`` 目录执行 ``pip install -e .`` 后::

    lis312 gf --tau 321
    lis312 stats --tau 1243 --n 10 --format csv
    python3 -m lis312.app verify --tau 1243 --n 7

退出码：0 成功；1 校验不一致；2 输入错误（含其余 Lis312Error）。
"""

from __future__ import annotations

import logging
import sys
from typing import Optional, Sequence, TextIO

from lis312.cli.commands import COMMANDS, CommandContext
from lis312.cli.parser import build_parser
from lis312.errors import InvalidInputError, Lis312Error
from lis312.gf.engine import GeneratingFunctionEngine
from lis312.utils.config_handler import load_all_configs
from lis312.utils.logger_handler import get_logger, set_console_level

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID_INPUT = 2


def main(argv: Optional[Sequence[str]] = None, *, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    set_console_level(logging.INFO if args.verbose else logging.WARNING)

    logger.info(f"执行命令: {args.command} {vars(args)}")
    try:
        config = load_all_configs(env=args.env)
    except (KeyError, InvalidInputError) as e:
        # 未知的配置环境名，或 LIS312_ORACLE_CAP 不合法
        logger.error(f"配置错误: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    try:
        ctx = CommandContext(config=config, engine=GeneratingFunctionEngine(config.engine), out=out)
        return COMMANDS[args.command](args, ctx)
    except InvalidInputError as e:
        logger.error(f"输入错误: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except Lis312Error as e:
        # 没有主导极点、分母常数项为 0 等：输入在数学上不适用于该命令
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except Exception:
        logger.exception(f"命令 {args.command} 执行失败")
        raise


if __name__ == "__main__":
    sys.exit(main())
