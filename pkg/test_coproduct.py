#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
测试四种余乘的算例
"""

import pytest

from src.core.coproduct import (
    coproduct, delta_eps, delta_eps_breadth_expansion, delta_eps_comb, delta_eps_lin,
    delta_foissy, delta_foissy_lin, delta_rt, delta_rt_lin,
)
from src.core.exceptions import ForestArgumentError, ForestDomainError
from src.core.forest import UNIT
from src.core.freemodule import LinComb, Tensor2
from src.core.textio import parse_forest, parse_lincomb, parse_tensor2, serialize

SECOND_EXAMPLE = "@[@ x] @[y @[z]] @[w]"


@pytest.mark.parametrize("forest, expected", [
    ("@[x]", "x (x) 1 + 1 (x) @"),
    ("@[@ x]", "@ x (x) 1 + @ (x) @ + 1 (x) @[x]"),
    ("@[@[x] @]", "@[x] @ (x) 1 + @[x] (x) @ + x (x) @[@] + 1 (x) @[@ @]"),
    ("x y", "x (x) 1 + 1 (x) y"),
    ("x", "1 (x) 1"),
])
def test_delta_eps_golden(forest, expected):
    """测试递归 Δε 与文献算例逐项一致"""
    assert serialize(delta_eps(parse_forest(forest))) == expected


def test_delta_eps_of_unit_is_zero():
    assert delta_eps(UNIT).is_zero()
    assert delta_eps_comb(UNIT).is_zero()
    assert serialize(delta_eps(UNIT)) == "0"


def test_delta_eps_comb_first_example():
    """测试组合定义：Σ Bₐ⊗Rₐ"""
    expected = parse_tensor2("y @[x] (x) 1 + 1 (x) @[@[x]] + y x (x) @ + y (x) @[@]")
    F = parse_forest("@[y @[x]]")
    assert delta_eps_comb(F) == expected
    assert delta_eps(F) == expected


def test_delta_eps_second_example():
    """测试三棵树森林的九项余乘"""
    expected = parse_tensor2(
        "@[@ x] @[y @[z]] w (x) 1"
        " + @[@ x] @[y @[z]] (x) @"
        " + @[@ x] y @[z] (x) @[w]"
        " + @[@ x] y z (x) @ @[w]"
        " + @[@ x] y (x) @[@] @[w]"
        " + @[@ x] (x) @[@[z]] @[w]"
        " + @ x (x) @[y @[z]] @[w]"
        " + @ (x) @ @[y @[z]] @[w]"
        " + 1 (x) @[x] @[y @[z]] @[w]"
    )
    F = parse_forest(SECOND_EXAMPLE)
    assert len(expected) == 9
    assert delta_eps_comb(F) == expected
    assert delta_eps(F) == expected
    assert delta_eps_breadth_expansion(F) == expected


def test_delta_eps_lin():
    """测试线性延拓"""
    assert delta_eps_lin(LinComb.zero()).is_zero()
    assert delta_eps_lin(parse_lincomb("2 * x")) == Tensor2.of(UNIT, UNIT, 2)
    assert delta_eps_lin(parse_lincomb("x + @[x]")) == parse_tensor2("1 (x) 1 + x (x) 1 + 1 (x) @")


@pytest.mark.parametrize("forest, expected", [
    ("@[@]", "@[@] (x) 1 + 1 (x) @[@] + @ (x) @"),
    ("@[@ @]", "@[@ @] (x) 1 + 1 (x) @[@ @] + @ @ (x) @ + @ (x) @[@]"),
    ("@[@[@] @]", "@[@[@] @] (x) 1 + @[@] @ (x) @ + @[@] (x) @[@] + @ (x) @[@ @] + 1 (x) @[@[@] @]"),
])
def test_delta_foissy_golden(forest, expected):
    """测试 Foissy 余乘的三个算例"""
    assert delta_foissy(parse_forest(forest)) == parse_tensor2(expected)


def test_delta_foissy_domain():
    assert delta_foissy(UNIT) == Tensor2.of(UNIT, UNIT)
    with pytest.raises(ForestDomainError):
        delta_foissy(parse_forest("@[x]"))
    assert delta_foissy_lin(parse_lincomb("@ - 1")) == parse_tensor2("@ (x) 1 + 1 (x) @ - 1 (x) 1")


def test_delta_rt_golden():
    """测试可乘余乘 Δ_RT 的七项算例"""
    F = parse_forest("@[y @[x]]")
    expected = parse_tensor2(
        "@[y @[x]] (x) 1 + x (x) @[y @] + y (x) @[@[x]] + @[x] (x) @[y]"
        " + y x (x) @[@] + y @[x] (x) @ + 1 (x) @[y @[x]]"
    )
    assert delta_rt(F) == expected
    assert serialize(delta_rt(F)) == (
        "@[y @[x]] (x) 1 + y @[x] (x) @ + y x (x) @[@] + @[x] (x) @[y]"
        " + y (x) @[@[x]] + x (x) @[y @] + 1 (x) @[y @[x]]"
    )


def test_delta_rt_unit_and_generators():
    assert delta_rt(UNIT) == Tensor2.of(UNIT, UNIT)
    assert delta_rt(parse_forest("x")) == parse_tensor2("x (x) 1 + 1 (x) x")
    assert delta_rt_lin(parse_lincomb("x + y")) == parse_tensor2("x (x) 1 + 1 (x) x + y (x) 1 + 1 (x) y")


def test_coproduct_dispatch():
    F = parse_forest("@[x]")
    assert coproduct("eps", F) == delta_eps(F)
    assert coproduct("comb", F) == delta_eps(F)
    assert coproduct("rt", F) == delta_rt(F)
    with pytest.raises(ForestArgumentError):
        coproduct("hopf", F)
