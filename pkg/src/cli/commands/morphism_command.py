#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
morphism 子命令：泛态射 f̄ 在目标代数中的像
"""

from ...core.poly_model import UniversalMorphism, get_target
from ...core.textio import parse_lincomb
from . import emit


def run_morphism(system, args, stream=None) -> int:
    """输出 f̄(expr)；--check 时同时验证相容性

    Returns:
        退出码，--check 且不相容时为 1
    """
    morphism = UniversalMorphism(get_target(args.target), system.config.get("enumeration.alphabet", []))
    v = parse_lincomb(args.expr)
    emit(system, morphism.on_lincomb(v), stream)
    if args.check:
        return 0 if all(morphism.check(F) for F in v.forests()) else 1
    return 0
