#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
import os
import sys
import time
import re
from typing import Optional

from pythonjsonlogger import jsonlogger

# 全局日志对象
logger = logging.getLogger("forest_hopf")

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(log_level: str = "WARNING", log_path: Optional[str] = None, log_format: str = "text") -> None:
    """设置日志配置

    Args:
        log_level: 日志级别，如 "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"
        log_path: 日志文件路径，None表示只输出到控制台
        log_format: "text" 为普通文本，"json" 为JSON格式日志
    """
    # 清除现有处理器
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    logger.setLevel(getattr(logging, log_level.upper()))
    logger.propagate = False

    # 创建格式器
    if log_format == "json":
        formatter = jsonlogger.JsonFormatter(LOG_FORMAT)
    else:
        formatter = logging.Formatter(LOG_FORMAT)

    # 控制台处理器，标准输出保留给计算结果
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    # 文件处理器
    if log_path:
        log_dir = os.path.dirname(log_path)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)

        file_handler = logging.FileHandler(log_path, encoding="utf-8")
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)


def get_current_timestamp() -> int:
    """获取当前时间戳（秒）

    Returns:
        当前时间戳
    """
    return int(time.time())


def get_current_datetime() -> str:
    """获取当前日期时间字符串

    Returns:
        日期时间字符串，格式：YYYY-MM-DD HH:MM:SS
    """
    return time.strftime("%Y-%m-%d %H:%M:%S", time.localtime())


def format_duration(seconds: float) -> str:
    """格式化耗时为可读字符串

    Args:
        seconds: 秒数

    Returns:
        如 "850 ms" 或 "12.3 s"
    """
    if seconds < 1.0:
        return f"{seconds * 1000:.0f} ms"
    return f"{seconds:.1f} s"


def is_identifier(name: str) -> bool:
    """判断是否为合法的生成元名

    Args:
        name: 待检查的字符串

    Returns:
        是否匹配 [A-Za-z_][A-Za-z0-9_]*
    """
    return bool(re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name))
