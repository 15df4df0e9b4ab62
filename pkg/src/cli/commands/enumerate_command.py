#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
enumerate 子命令：列出或计数森林
"""

import json
import sys

from ...core.enumerator import count, enumerate_forests
from ...core.exceptions import ForestArgumentError
from ...core.textio import to_obj
from ...core.utils import logger
from . import emit_obj, parse_alphabet


def run_enumerate(system, args, stream=None) -> int:
    """列出 0..N 个顶点的全部森林，或只输出各层计数

    Args:
        system: ForestHopfSystem实例
        args: max_vertices、alphabet、count_only
        stream: 输出流

    Returns:
        退出码
    """
    stream = stream or sys.stdout
    max_vertices = args.max_vertices
    if max_vertices is None:
        max_vertices = system.config.get("enumeration.max_vertices", 5)
    if max_vertices < 0:
        raise ForestArgumentError(f"max vertices must be >= 0, got {max_vertices}")
    if args.alphabet is None:
        alphabet = list(system.config.get("enumeration.alphabet", []))
    else:
        alphabet = parse_alphabet(args.alphabet)
    as_json = system.config.get("output.json", False)

    if args.count_only:
        counts = [count(n, len(set(alphabet))) for n in range(max_vertices + 1)]
        if as_json:
            emit_obj(counts, stream)
        else:
            stream.write(" ".join(str(c) for c in counts) + "\n")
        return 0

    total = 0
    for n in range(max_vertices + 1):
        for F in enumerate_forests(n, alphabet):
            stream.write((f"{n}\t{F.key}" if not as_json else _json_line(n, F)) + "\n")
            total += 1
    logger.info(f"Enumerated {total} forests up to {max_vertices} vertices over {alphabet}")
    return 0


def _json_line(n, F) -> str:
    return json.dumps({"vertices": n, "forest": to_obj(F)}, separators=(",", ":"))
