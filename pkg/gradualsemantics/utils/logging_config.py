"""日志配置模块。

标准输出保留给计算结果（强度表、矩阵、导出文本），日志一律写到标准错误。
"""

import logging
import sys
from pathlib import Path

from gradualsemantics.config.settings import get_settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# 这些库在 DEBUG 级别输出语法构建与协议细节
QUIET_LOGGERS = ("lark", "mcp")


def _level(name: str) -> int:
    return getattr(logging, name.upper(), logging.WARNING)


def setup_logging(level: str | None = None, log_file: str | None = None) -> None:
    """配置根 logger。

    Args:
        level: 日志级别 (DEBUG, INFO, WARNING, ERROR, CRITICAL)，默认取配置 ``log_level``
        log_file: 日志文件路径，默认取配置 ``log_file``；文件始终记录 DEBUG 级别
    """
    settings = get_settings()
    console_level = _level(level or settings.log_level)
    log_file = log_file or settings.log_file
    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)

    root_logger = logging.getLogger()
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)
        root_logger.setLevel(logging.DEBUG)
    else:
        root_logger.setLevel(console_level)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """获取 logger 实例。"""
    return logging.getLogger(name)
