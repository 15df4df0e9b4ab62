#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
coprod 子命令：计算四种余乘之一
"""

from ...core.coproduct import coproduct
from ...core.textio import parse_forest
from . import emit


def run_coprod(system, args, stream=None) -> int:
    """输出 --method 指定的余乘

    Returns:
        退出码
    """
    F = parse_forest(args.expr)
    emit(system, coproduct(args.method, F), stream)
    return 0
