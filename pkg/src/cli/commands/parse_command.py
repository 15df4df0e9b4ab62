#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
parse 子命令：输出表达式的规范形式
"""

from ...core.textio import parse_forest, parse_lincomb, parse_tensor2
from ...core.utils import logger
from . import emit

PARSERS = {
    "forest": parse_forest,
    "lincomb": parse_lincomb,
    "tensor": parse_tensor2,
}


def run_parse(system, args, stream=None) -> int:
    """解析并回显规范形式

    Args:
        system: ForestHopfSystem实例
        args: 含 expr 与 kind 的命令行参数
        stream: 输出流

    Returns:
        退出码
    """
    value = PARSERS[args.kind](args.expr)
    logger.debug(f"Parsed {args.kind} expression {args.expr!r}")
    emit(system, value, stream)
    return 0
