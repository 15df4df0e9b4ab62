#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""卷积代数、圆卷积、导子 D_ε = m∘Δε 与对极

对极按截断级数 S = −Σ_{k≥0} ((−1)^k / k!) D_ε^{∘k} 计算，D_ε 每次使顶点数减一，
因此在 n 个顶点的森林上级数于 k = n 处截断。
"""

import math
import threading
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional, Union

from .coproduct import Coproduct, delta_eps
from .exceptions import ForestArgumentError, ForestHopfError
from .forest import Forest, ForestLike, Tree, as_forest
from .freemodule import LinComb, lc_mul
from .utils import logger


class Endo:
    """LinComb 上的线性自同态，由其在基森林上的作用给出"""

    def __init__(self, on_basis: Callable[[Forest], LinComb], name: str = "f"):
        """初始化自同态

        Args:
            on_basis: 基森林 -> LinComb
            name: 显示名称
        """
        self.name = name
        self._on_basis = on_basis
        self._cache: Dict[Forest, LinComb] = {}
        self._lock = threading.Lock()

    def on_basis(self, F: ForestLike) -> LinComb:
        F = as_forest(F)
        with self._lock:
            cached = self._cache.get(F)
        if cached is not None:
            return cached
        value = self._on_basis(F)
        with self._lock:
            self._cache.setdefault(F, value)
        return value

    def __call__(self, v: Union[LinComb, ForestLike]) -> LinComb:
        if isinstance(v, (Forest, Tree)):
            return self.on_basis(v)
        return v.apply(self.on_basis)

    def agrees_with(self, other: "Endo", basis: Iterable[ForestLike]) -> bool:
        """在给定的有限基上外延地比较两个自同态"""
        return all(self.on_basis(F) == other.on_basis(F) for F in basis)

    def vanishes_on(self, basis: Iterable[ForestLike]) -> bool:
        return all(self.on_basis(F).is_zero() for F in basis)

    def cache_size(self) -> int:
        with self._lock:
            return len(self._cache)

    def clear_cache(self) -> None:
        with self._lock:
            self._cache.clear()

    def __repr__(self) -> str:
        return f"Endo({self.name})"


ZERO = Endo(lambda F: LinComb.zero(), "0")
IDENTITY = Endo(lambda F: LinComb.of(F), "id")


def _d_eps_on_basis(F: Forest) -> LinComb:
    return delta_eps(F).multiply_legs()


D_EPS = Endo(_d_eps_on_basis, "D_eps")


def d_eps(v: Union[LinComb, ForestLike]) -> LinComb:
    """D_ε = m∘Δε：D(F) = Σₐ Bₐ·Rₐ，把 n 顶点分量映到 n−1 顶点分量"""
    return D_EPS(v)


def convolve(f: Endo, g: Endo, delta: Coproduct = delta_eps) -> Endo:
    """卷积 f∗g = m(f⊗g)Δ"""

    def on_basis(F: Forest) -> LinComb:
        total = LinComb.zero()
        for (left, right), c in delta(F).items():
            total = total + lc_mul(f.on_basis(left), g.on_basis(right)).scale(c)
        return total

    return Endo(on_basis, f"({f.name} * {g.name})")


def conv_power(f: Endo, k: int) -> Endo:
    """卷积幂：f^{∗1} = f，f^{∗(k+1)} = f^{∗k} ∗ f

    Raises:
        ForestArgumentError: k < 1（卷积没有单位元）
    """
    if not isinstance(k, int) or k < 1:
        raise ForestArgumentError(f"convolution power needs k >= 1, got {k}")
    power = f
    for _ in range(k - 1):
        power = convolve(power, f)
    return power


def circ_convolve(f: Endo, g: Endo, delta: Coproduct = delta_eps) -> Endo:
    """圆卷积 f⊛g = f∗g + f + g，零映射为其单位元"""
    product = convolve(f, g, delta)

    def on_basis(F: Forest) -> LinComb:
        return product.on_basis(F) + f.on_basis(F) + g.on_basis(F)

    return Endo(on_basis, f"({f.name} (*) {g.name})")


def compose(f: Endo, g: Endo) -> Endo:
    """复合 f∘g"""
    return Endo(lambda F: f(g.on_basis(F)), f"{f.name}.{g.name}")


def compose_power(f: Endo, k: int) -> Endo:
    """k 次复合，f^{∘0} = id"""
    if not isinstance(k, int) or k < 0:
        raise ForestArgumentError(f"composition power needs k >= 0, got {k}")
    power = IDENTITY
    for _ in range(k):
        power = compose(f, power)
    return power


def nilpotency_witness(F: ForestLike, f: Optional[Endo] = None) -> int:
    """最小的 k ≥ 1 使 f^{∗k}(F) = 0，默认 f = D_ε

    Returns:
        见证指数，对 D_ε 不超过 |F|+1
    """
    F = as_forest(F)
    f = D_EPS if f is None else f
    bound = F.vertex_count + 1
    power = f
    for k in range(1, bound + 1):
        if power.on_basis(F).is_zero():
            return k
        power = convolve(power, f)
    raise ForestHopfError(f"{f.name} is not nilpotent on {F.key} within {bound} convolution powers")


def _antipode_on_basis(F: Forest) -> LinComb:
    term = LinComb.of(F)
    series = term
    for k in range(1, F.vertex_count + 1):
        term = D_EPS(term)
        if term.is_zero():
            break
        series = series + term.scale(Fraction((-1) ** k, math.factorial(k)))
    return -series


ANTIPODE = Endo(_antipode_on_basis, "S")


def antipode(v: Union[LinComb, ForestLike]) -> LinComb:
    """对极 S(F) = −Σ_{k=0}^{|F|} ((−1)^k / k!) D_ε^{∘k}(F)，线性延拓；S(1) = −1"""
    return ANTIPODE(v)


def _recursive_antipode_on_basis(F: Forest) -> LinComb:
    # 由 Σ S(a₍₁₎)a₍₂₎ + S(a) + a = 0 按顶点数递归求解
    total = -LinComb.of(F)
    for (left, right), c in delta_eps(F).items():
        total = total - lc_mul(RECURSIVE_ANTIPODE.on_basis(left), LinComb.of(right)).scale(c)
    return total


RECURSIVE_ANTIPODE = Endo(_recursive_antipode_on_basis, "S_rec")


def antipode_recursive(v: Union[LinComb, ForestLike]) -> LinComb:
    """独立的对极参照实现：求解第一条对极方程"""
    return RECURSIVE_ANTIPODE(v)


def antipode_equations(F: ForestLike, S: Endo = ANTIPODE) -> tuple:
    """两条对极方程的左端

    Returns:
        (Σ S(a₍₁₎)a₍₂₎ + S(a) + a, Σ a₍₁₎S(a₍₂₎) + S(a) + a)
    """
    F = as_forest(F)
    base = S.on_basis(F) + LinComb.of(F)
    left_eq = base
    right_eq = base
    for (left, right), c in delta_eps(F).items():
        left_eq = left_eq + lc_mul(S.on_basis(left), LinComb.of(right)).scale(c)
        right_eq = right_eq + lc_mul(LinComb.of(left), S.on_basis(right)).scale(c)
    return left_eq, right_eq


def antipode_check(F: ForestLike, S: Endo = ANTIPODE) -> bool:
    """两条对极方程都化为零时返回 True"""
    left_eq, right_eq = antipode_equations(F, S)
    ok = left_eq.is_zero() and right_eq.is_zero()
    if not ok:
        logger.debug(f"Antipode equations fail on {as_forest(F).key}")
    return ok


def clear_caches() -> None:
    for endo in (D_EPS, ANTIPODE, RECURSIVE_ANTIPODE):
        endo.clear_cache()
