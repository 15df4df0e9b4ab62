#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""命令行子命令，每个模块实现一个子命令"""

import json
import sys
from typing import Any, List, Optional, TextIO

from ...core.exceptions import ForestArgumentError
from ...core.forest import SIGMA, check_decoration
from ...core.textio import serialize, to_json, to_obj


def emit(system, value: Any, stream: Optional[TextIO] = None) -> None:
    """按配置输出规范文本或 JSON

    Args:
        system: ForestHopfSystem 实例
        value: 森林、线性组合、张量或多项式
        stream: 输出流，默认标准输出
    """
    stream = stream or sys.stdout
    if system.config.get("output.json", False):
        stream.write(to_json(value) + "\n")
    else:
        stream.write(serialize(value) + "\n")


def emit_obj(obj: Any, stream: Optional[TextIO] = None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n")


def parse_alphabet(text: str) -> List[str]:
    """解析逗号分隔的字母表，空串表示 X = ∅"""
    names = [name.strip() for name in text.split(",") if name.strip()]
    for name in names:
        if name == SIGMA:
            raise ForestArgumentError("the operator label @ cannot be a generator")
        check_decoration(name)
    return names


__all__ = ["emit", "emit_obj", "parse_alphabet", "to_obj"]
