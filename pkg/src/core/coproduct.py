#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""森林上的四种余乘

- Δε：递归定义（ε-余圈条件 + 宽度归纳）与组合定义 Σ Bₐ⊗Rₐ
- Δ_F：无装饰森林上的 Foissy 余乘
- Δ_RT：满足经典余圈条件且可乘的余乘
"""

from functools import lru_cache
from typing import Callable, Dict

from .exceptions import ForestArgumentError, ForestDomainError
from .forest import (
    Forest, ForestLike, SIGMA, UNIT, all_splits, as_forest, bplus, concat_all,
    peel, tree_sequence, unbplus,
)
from .freemodule import LinComb, Tensor2, act_left, act_right, t2_mul
from .utils import logger

Coproduct = Callable[[ForestLike], Tensor2]


def graft_right(t: Tensor2) -> Tensor2:
    """(id⊗B⁺)t"""
    return Tensor2._raw({(left, as_forest(bplus(right))): c for (left, right), c in t.items()})


@lru_cache(maxsize=None)
def _delta_eps(F: Forest) -> Tensor2:
    if F.is_unit:
        return Tensor2.zero()
    if len(F.trees) >= 2:
        # Δε(T₁…T_m) = T₁·Δε(T₂…T_m) + Δε(T₁)·(T₂…T_m)
        first, rest = peel(F)
        return act_left(LinComb.of(first), _delta_eps(rest)) + act_right(_delta_eps(first), LinComb.of(rest))
    tree = F.trees[0]
    if tree.label != SIGMA:
        return Tensor2.of(UNIT, UNIT)
    G = unbplus(F)
    # ε-余圈条件：Δε B⁺(G) = G⊗1 + (id⊗B⁺)Δε(G)
    return Tensor2.of(G, UNIT) + graft_right(_delta_eps(G))


def delta_eps(F: ForestLike) -> Tensor2:
    """递归定义的 Δε

    Args:
        F: 森林

    Returns:
        Δε(F)；Δε(1) 为零张量
    """
    return _delta_eps(as_forest(F))


@lru_cache(maxsize=None)
def _delta_eps_comb(F: Forest) -> Tensor2:
    return Tensor2((pair, 1) for pair in all_splits(F))


def delta_eps_comb(F: ForestLike) -> Tensor2:
    """组合定义的 Δε(F) = Σ_{a∈V(F)} Bₐ⊗Rₐ"""
    return _delta_eps_comb(as_forest(F))


def delta_eps_breadth_expansion(F: ForestLike) -> Tensor2:
    """Σᵢ (T₁…Tᵢ₋₁)·Δε(Tᵢ)·(Tᵢ₊₁…T_k)"""
    parts = tree_sequence(F)
    total = Tensor2.zero()
    for i, T in enumerate(parts):
        before = LinComb.of(concat_all(parts[:i]))
        after = LinComb.of(concat_all(parts[i + 1:]))
        total = total + act_right(act_left(before, delta_eps(T)), after)
    return total


def _check_undecorated(F: Forest) -> None:
    for label in F.layout.labels:
        if label != SIGMA:
            raise ForestDomainError(f"Foissy coproduct is defined on undecorated forests only, found label {label!r}")


@lru_cache(maxsize=None)
def _delta_foissy(F: Forest) -> Tensor2:
    if F.is_unit:
        return Tensor2.of(UNIT, UNIT)
    if len(F.trees) >= 2:
        first, rest = peel(F)
        return (
            act_left(LinComb.of(first), _delta_foissy(rest))
            + act_right(_delta_foissy(first), LinComb.of(rest))
            - Tensor2.of(first, rest)
        )
    G = unbplus(F)
    return Tensor2.of(F, UNIT) + graft_right(_delta_foissy(G))


def delta_foissy(F: ForestLike) -> Tensor2:
    """Foissy 余乘 Δ_F

    Raises:
        ForestDomainError: F 含有生成元装饰
    """
    F = as_forest(F)
    _check_undecorated(F)
    return _delta_foissy(F)


@lru_cache(maxsize=None)
def _delta_rt(F: Forest) -> Tensor2:
    if F.is_unit:
        return Tensor2.of(UNIT, UNIT)
    if len(F.trees) >= 2:
        first, rest = peel(F)
        return t2_mul(_delta_rt(first), _delta_rt(rest))
    tree = F.trees[0]
    if tree.label != SIGMA:
        return Tensor2.of(F, UNIT) + Tensor2.of(UNIT, F)
    G = unbplus(F)
    # 经典余圈条件：Δ_RT B⁺(G) = B⁺(G)⊗1 + (id⊗B⁺)Δ_RT(G)
    return Tensor2.of(F, UNIT) + graft_right(_delta_rt(G))


def delta_rt(F: ForestLike) -> Tensor2:
    """可乘的 Δ_RT，生成元叶子为本原元"""
    return _delta_rt(as_forest(F))


def linear(delta: Coproduct) -> Callable[[LinComb], Tensor2]:
    """把基上的余乘线性延拓到 LinComb"""

    def extended(v: LinComb) -> Tensor2:
        result = Tensor2.zero()
        for F, c in v.items():
            result = result + delta(F).scale(c)
        return result

    extended.__name__ = f"{getattr(delta, '__name__', 'delta')}_lin"
    return extended


delta_eps_lin = linear(delta_eps)
delta_foissy_lin = linear(delta_foissy)
delta_rt_lin = linear(delta_rt)

COPRODUCTS: Dict[str, Coproduct] = {
    "eps": delta_eps,
    "comb": delta_eps_comb,
    "foissy": delta_foissy,
    "rt": delta_rt,
}


def coproduct(method: str, F: ForestLike) -> Tensor2:
    """按名称调用余乘

    Args:
        method: eps, comb, foissy 或 rt
        F: 森林

    Raises:
        ForestArgumentError: 未知的余乘名称
    """
    try:
        delta = COPRODUCTS[method]
    except KeyError:
        raise ForestArgumentError(f"unknown coproduct method {method!r}, expected one of {sorted(COPRODUCTS)}")
    logger.debug(f"Computing {method} coproduct of {as_forest(F).key}")
    return delta(F)


def cache_sizes() -> Dict[str, int]:
    """各余乘缓存中的森林数"""
    return {
        "eps": _delta_eps.cache_info().currsize,
        "comb": _delta_eps_comb.cache_info().currsize,
        "foissy": _delta_foissy.cache_info().currsize,
        "rt": _delta_rt.cache_info().currsize,
    }


def clear_caches() -> None:
    for cached in (_delta_eps, _delta_eps_comb, _delta_foissy, _delta_rt):
        cached.cache_clear()
