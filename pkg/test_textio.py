#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
测试解析器、规范序列化与 JSON 交换格式
"""

from fractions import Fraction

import pytest

from src.core.coproduct import delta_eps, delta_rt
from src.core.enumerator import enumerate_up_to
from src.core.exceptions import ForestDecodeError, ForestFormatError
from src.core.forest import UNIT, leaf
from src.core.freemodule import LinComb, Tensor2
from src.core.hopf import antipode
from src.core.poly_model import Poly
from src.core.textio import (
    from_json, parse_forest, parse_lincomb, parse_tensor2, serialize, serialize_forest,
    to_json, tokenize,
)


def test_parse_forest():
    """测试森林解析"""
    F = parse_forest("@[y @[x]]")
    assert F.vertex_count == 4
    assert F.trees[0].children[1].key == "@[x]"
    assert parse_forest("1") == UNIT
    assert parse_forest("  @[ x ]  ").key == "@[x]"
    assert parse_forest("@[]").key == "@"


def test_parse_forest_rejects_internal_generator():
    """测试 x[@] 被拒绝且带位置"""
    with pytest.raises(ForestFormatError, match="generator label on internal vertex") as info:
        parse_forest("x[@]")
    assert info.value.line == 1
    assert info.value.column == 1

    with pytest.raises(ForestFormatError) as info:
        parse_forest("@[y x[@]]")
    assert info.value.column == 5


@pytest.mark.parametrize("source, column", [
    ("@[x", 4),
    ("@]", 2),
    ("x 1", 3),
    ("@ # x", 3),
    ("", 1),
    ("2", 1),
])
def test_parse_forest_syntax_errors(source, column):
    """测试语法错误的位置"""
    with pytest.raises(ForestFormatError) as info:
        parse_forest(source)
    assert info.value.column == column
    assert "at line 1" in str(info.value)


def test_error_position_on_later_line():
    with pytest.raises(ForestFormatError) as info:
        parse_forest("@[x\n  y[@]]")
    assert (info.value.line, info.value.column) == (2, 3)


def test_tokenize():
    kinds = [t.kind for t in tokenize("3/2 * x (x) @[y] - 1")]
    assert kinds == ["NUMBER", "STAR", "IDENT", "OTIMES", "SIGMA", "LBRACKET", "IDENT", "RBRACKET", "MINUS", "NUMBER", "END"]


def test_parse_lincomb():
    """测试线性组合解析"""
    v = parse_lincomb("3/2 * x + @")
    assert v.coefficient(leaf("x")) == Fraction(3, 2)
    assert v.coefficient(leaf("@")) == 1
    assert parse_lincomb("- 1") == LinComb.of(UNIT, -1)
    assert parse_lincomb("0").is_zero()
    assert parse_lincomb("x - x").is_zero()
    assert parse_lincomb("1 * 1 + 2") == LinComb.of(UNIT, 3)


def test_parse_tensor2():
    t = parse_tensor2("x (x) 1 + 1 (x) @")
    assert t == Tensor2.of(leaf("x"), UNIT) + Tensor2.of(UNIT, leaf("@"))
    assert parse_tensor2("0").is_zero()
    assert parse_tensor2("- 2 * x (x) y") == Tensor2.of(leaf("x"), leaf("y"), -2)
    with pytest.raises(ForestFormatError):
        parse_tensor2("x (x)")
    with pytest.raises(ForestFormatError):
        parse_tensor2("3 + x (x) y")


def test_canonical_serialization():
    """测试规范输出"""
    assert serialize(delta_eps(parse_forest("@[x]"))) == "x (x) 1 + 1 (x) @"
    assert serialize(antipode(UNIT)) == "- 1"
    assert serialize(LinComb.zero()) == "0"
    assert serialize(Tensor2.zero()) == "0"
    assert serialize(parse_lincomb("@ + 3/2 * x")) == "3/2 * x + @"
    assert serialize(parse_lincomb("- 2 * 1")) == "- 2 * 1"
    assert serialize(Poly([-1, 2, -1])) == "- x^2 + 2 * x - 1"
    assert serialize(Poly.zero()) == "0"
    assert serialize_forest(parse_forest("@[ @ x ] y")) == "@[@ x] y"


def test_forest_round_trip():
    """测试 parse ∘ serialize 在全部小森林上为恒等"""
    for F in enumerate_up_to(5, ["x", "y"]):
        assert parse_forest(serialize(F)) == F
        assert from_json(to_json(F)) == F


def test_computed_values_round_trip():
    for F in enumerate_up_to(4, ["x"]):
        t, s = delta_eps(F), antipode(F)
        assert parse_tensor2(serialize(t)) == t
        assert parse_lincomb(serialize(s)) == s
        assert from_json(to_json(s)) == s
        assert from_json(to_json(t), kind="tensor") == t
    t = delta_rt(parse_forest("@[y @[x]]"))
    assert parse_tensor2(serialize(t)) == t


def test_json_schema():
    """测试 JSON 交换格式"""
    assert to_json(leaf("x")) == '[{"label":"x","children":[]}]'
    assert to_json(UNIT) == "[]"
    assert to_json(parse_lincomb("3/2 * x")) == '{"terms":[{"coeff":"3/2","forest":[{"label":"x","children":[]}]}]}'
    assert to_json(Tensor2.of(UNIT, UNIT)) == '{"terms":[{"coeff":"1/1","left":[],"right":[]}]}'
    assert from_json('{"terms":[]}', kind="tensor") == Tensor2.zero()
    assert from_json('{"terms":[]}') == LinComb.zero()
    assert from_json(to_json(Poly([1, 0, 3]))) == Poly([1, 0, 3])


@pytest.mark.parametrize("text", [
    "{",
    '{"label":"x"}',
    '[{"label":"x"}]',
    '[{"label":"x","children":[{"label":"@","children":[]}]}]',
    '[{"label":"1","children":[]}]',
    '{"terms":[{"coeff":1,"forest":[]}]}',
    '{"terms":[{"coeff":"1/0","forest":[]}]}',
    '{"terms":[{"coeff":"1","forest":[],"extra":0}]}',
])
def test_json_decode_errors(text):
    with pytest.raises(ForestDecodeError):
        from_json(text)


def test_zero_coproduct_json_needs_kind():
    """Δε(1) = 0 的 JSON 只有空 terms，需要 kind 才能还原为张量"""
    encoded = to_json(delta_eps(UNIT))
    assert encoded == '{"terms":[]}'
    decoded = from_json(encoded, kind="tensor")
    assert isinstance(decoded, Tensor2)
    assert decoded.is_zero()
    assert isinstance(from_json(encoded), LinComb)


def test_empty_brackets_on_generator():
    """空括号不产生子节点，生成元仍是叶子"""
    assert parse_forest("x[]") == parse_forest("x")
    assert parse_forest("@[y[] x]") == parse_forest("@[y x]")
    assert serialize(parse_forest("@[]")) == "@"
    with pytest.raises(ForestFormatError, match="generator label on internal vertex"):
        parse_forest("x[ @ ]")
