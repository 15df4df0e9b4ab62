#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
status 子命令：输出系统状态
"""

from . import emit_obj


def run_status(system, args, stream=None) -> int:
    emit_obj(system.get_status(), stream)
    return 0
