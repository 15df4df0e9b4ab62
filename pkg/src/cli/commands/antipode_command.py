#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
antipode 子命令
"""

from ...core.hopf import antipode, antipode_recursive
from ...core.textio import parse_lincomb
from . import emit


def run_antipode(system, args, stream=None) -> int:
    """输出线性组合的对极；--recursive 时用递归解作参照

    Returns:
        退出码
    """
    v = parse_lincomb(args.expr)
    S = antipode_recursive if args.recursive else antipode
    emit(system, S(v), stream)
    return 0
