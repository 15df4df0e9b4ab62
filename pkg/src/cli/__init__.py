#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""森林 Hopf 代数 - 命令行前端"""

from .app import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, build_parser, main

__all__ = ["EXIT_OK", "EXIT_USAGE", "EXIT_VIOLATION", "build_parser", "main"]
