#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
check 子命令：运行验证套件
"""

import sys

from ...core.utils import logger
from . import emit_obj, parse_alphabet


def run_check(system, args, stream=None) -> int:
    """运行一个或全部套件

    Returns:
        全部通过为 0，出现反例为 1
    """
    stream = stream or sys.stdout
    alphabet = None if args.alphabet is None else parse_alphabet(args.alphabet)
    results = system.run_suite(args.suite, args.max_vertices, alphabet)

    if system.config.get("output.json", False):
        emit_obj([result.to_dict() for result in results], stream)
    else:
        for result in results:
            stream.write(result.summary() + "\n")
            if not result.passed:
                stream.write(str(result.counterexample) + "\n")

    failed = [result.suite for result in results if not result.passed]
    if failed:
        logger.error(f"Property violation in suite(s): {', '.join(failed)}")
        return 1
    return 0
