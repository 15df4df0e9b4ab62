#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""森林Hopf代数 - 异常类型"""

from typing import Optional


class ForestHopfError(Exception):
    """所有本库异常的基类"""


class ForestFormatError(ForestHopfError, ValueError):
    """格式错误：非法装饰名、语法错误或叶子装饰规则被违反"""

    def __init__(self, message: str, source: Optional[str] = None, position: Optional[int] = None):
        """初始化格式错误

        Args:
            message: 错误描述
            source: 出错的源文本
            position: 出错位置（从0开始的字符偏移）
        """
        self.message = message
        self.source = source
        self.position = position
        self.line = None
        self.column = None
        if source is not None and position is not None:
            before = source[:position]
            self.line = before.count("\n") + 1
            self.column = position - (before.rfind("\n") + 1) + 1
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"{self.message} at line {self.line}, column {self.column}"


class ForestArgumentError(ForestHopfError, ValueError):
    """参数错误，如越界的顶点引用或 k = 0 的卷积幂"""


class ForestDomainError(ForestHopfError, ValueError):
    """运算不在定义域内，如对带装饰森林求 Foissy 余乘"""


class ForestDecodeError(ForestHopfError, ValueError):
    """JSON 结构不符合交换格式"""


class TargetRegistrationError(ForestHopfError):
    """目标代数的生成元像不满足 Δ(f(x)) = 1⊗1"""
