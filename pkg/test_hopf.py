#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
测试卷积代数、D_ε、局部幂零性与对极
"""

import pytest

from src.core.enumerator import enumerate_up_to
from src.core.exceptions import ForestArgumentError
from src.core.forest import UNIT
from src.core.freemodule import LinComb
from src.core.hopf import (
    ANTIPODE, D_EPS, IDENTITY, RECURSIVE_ANTIPODE, ZERO, antipode, antipode_check,
    antipode_equations, antipode_recursive, circ_convolve, compose_power, conv_power,
    convolve, d_eps, nilpotency_witness,
)
from src.core.textio import parse_forest, parse_lincomb, serialize


def test_d_eps():
    """测试 D_ε = m∘Δε"""
    assert d_eps(UNIT).is_zero()
    assert d_eps(parse_forest("x")) == LinComb.one()
    assert d_eps(parse_forest("@[x]")) == parse_lincomb("x + @")
    assert d_eps(parse_lincomb("x - @")) == LinComb.zero()
    assert d_eps(parse_lincomb("2 * x - @")) == LinComb.one()


def test_convolve():
    """测试卷积"""
    F = parse_forest("@[x]")
    assert convolve(IDENTITY, ZERO).on_basis(F).is_zero()
    assert convolve(IDENTITY, IDENTITY).on_basis(parse_forest("x")) == LinComb.one()
    assert convolve(D_EPS, D_EPS).on_basis(F).is_zero()


def test_conv_power():
    """测试卷积幂 f^{∗1} = f，f^{∗(k+1)} = f^{∗k} ∗ f"""
    assert conv_power(D_EPS, 1).on_basis(UNIT).is_zero()
    assert conv_power(D_EPS, 2).on_basis(parse_forest("x")).is_zero()
    for F in enumerate_up_to(4, ["x"]):
        assert conv_power(D_EPS, F.vertex_count + 1).on_basis(F).is_zero()
    with pytest.raises(ForestArgumentError):
        conv_power(D_EPS, 0)


def test_compose_power():
    F = parse_forest("@[x]")
    assert compose_power(D_EPS, 0).on_basis(F) == LinComb.of(F)
    assert compose_power(D_EPS, 2).on_basis(F) == LinComb.of(UNIT, 2)
    assert compose_power(D_EPS, 3).on_basis(F).is_zero()
    with pytest.raises(ForestArgumentError):
        compose_power(D_EPS, -1)


def test_circ_convolve_unit():
    """测试零映射是圆卷积的单位元"""
    basis = list(enumerate_up_to(3, ["x"]))
    assert circ_convolve(D_EPS, ZERO).agrees_with(D_EPS, basis)
    assert circ_convolve(ZERO, D_EPS).agrees_with(D_EPS, basis)
    assert circ_convolve(ZERO, ZERO).vanishes_on(basis)
    assert circ_convolve(ANTIPODE, IDENTITY).vanishes_on(basis)
    assert circ_convolve(IDENTITY, ANTIPODE).vanishes_on(basis)


def test_nilpotency_witness():
    """测试局部幂零见证"""
    assert nilpotency_witness(UNIT) == 1
    assert nilpotency_witness(parse_forest("x")) == 2
    F = parse_forest("@[y @[x]]")
    assert nilpotency_witness(F) == 3
    assert nilpotency_witness(F) <= F.vertex_count + 1


def test_antipode_golden():
    """测试对极算例"""
    assert serialize(antipode(UNIT)) == "- 1"
    assert antipode(parse_forest("x")) == parse_lincomb("1 - x")
    assert antipode(parse_forest("@[x]")) == parse_lincomb("- @[x] + x + @ - 1")
    assert serialize(antipode(parse_forest("@[x]"))) == "- @[x] + x + @ - 1"
    assert antipode(parse_forest("@")) == parse_lincomb("1 - @")


def test_antipode_is_linear():
    v = parse_lincomb("3/2 * x - @[y] + 2")
    expected = antipode(parse_forest("x")).scale("3/2") - antipode(parse_forest("@[y]")) + antipode(UNIT).scale(2)
    assert antipode(v) == expected


def test_antipode_check():
    """测试两条对极方程"""
    assert antipode_check(UNIT)
    assert antipode_check(parse_forest("x"))
    for F in enumerate_up_to(4, ["x", "y"]):
        assert antipode_check(F)
        assert antipode(F) == antipode_recursive(F)


def test_antipode_equations_detect_wrong_map():
    left_eq, right_eq = antipode_equations(parse_forest("x"), IDENTITY)
    assert not left_eq.is_zero()
    assert not antipode_check(parse_forest("@[x]"), IDENTITY)
    assert antipode_check(parse_forest("@[x]"), RECURSIVE_ANTIPODE)


def test_endo_cache():
    F = parse_forest("@[@ x]")
    first = ANTIPODE.on_basis(F)
    assert ANTIPODE.on_basis(F) is first
    assert ANTIPODE.cache_size() >= 1
