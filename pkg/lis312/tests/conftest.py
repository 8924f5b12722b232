"""
测试公共设置：日志只写控制台（或临时目录），配置环境固定为 default。
"""

import os
import tempfile

# 必须在导入 lis312 之前设置，logger 在模块导入时创建
os.environ.setdefault("LIS312_LOG_DIR", tempfile.mkdtemp(prefix="lis312-logs-"))
os.environ["LIS312_LOG_TO_FILE"] = "0"
os.environ.pop("LIS312_ENV", None)
os.environ.pop("LIS312_ORACLE_CAP", None)

import pytest  # noqa: E402

from lis312.gf.engine import GeneratingFunctionEngine  # noqa: E402
from lis312.utils.config_handler import ChebConfig, EngineConfig, OracleConfig  # noqa: E402


@pytest.fixture(scope="session")
def engine() -> GeneratingFunctionEngine:
    return GeneratingFunctionEngine(EngineConfig())


@pytest.fixture(scope="session")
def cheb_config() -> ChebConfig:
    return ChebConfig()


@pytest.fixture(scope="session")
def oracle_config() -> OracleConfig:
    return OracleConfig()
