#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""多项式模型 k[x] 与自由对象出发的泛态射

k[x] 上 Δ(1) = 0，Δ(xⁿ) = Σ_{i=0}^{n−1} x^i ⊗ x^{n−1−i}，S(xⁿ) = −(x−1)ⁿ，
余圈算子取 P(p) = x·p。泛态射 f̄ 由 f̄(1)=1、f̄(•x)=f(x)、
f̄(B⁺(G)) = P(f̄(G))、f̄(F₁F₂) = f̄(F₁)f̄(F₂) 递归确定。
"""

import math
import threading
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .coproduct import delta_eps
from .exceptions import ForestArgumentError, TargetRegistrationError
from .forest import Forest, ForestLike, SIGMA, as_forest, bplus, peel, unbplus
from .freemodule import LinComb, Scalar, Tensor2, _Combination, to_rational
from .hopf import antipode
from .utils import logger


class Poly:
    """有理系数的一元多项式，coeffs[i] 为 x^i 的系数"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar] = ()):
        values = [to_rational(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "Poly":
        if n < 0:
            raise ForestArgumentError(f"monomial degree must be >= 0, got {n}")
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls.monomial(1)

    @property
    def degree(self) -> int:
        """次数，零多项式为 −1"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> Iterable[Tuple[int, Fraction]]:
        return ((n, c) for n, c in enumerate(self.coeffs) if c)

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "Poly":
        c = to_rational(c)
        return Poly([c * v for v in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        result = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b
        return Poly(result)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ForestArgumentError(f"negative exponent {n} in k[x]")
        result = Poly.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("poly", self.coeffs))

    def __repr__(self) -> str:
        from .textio import serialize
        return f"Poly({serialize(self)!r})"


class PolyTensor2(_Combination):
    """k[x]⊗k[x] 中的元素：单项式对 (i, j) 表示 x^i⊗x^j"""

    def _check_key(self, key) -> Tuple[int, int]:
        i, j = key
        if i < 0 or j < 0:
            raise ForestArgumentError(f"negative exponent in {key}")
        return (int(i), int(j))

    @staticmethod
    def _sort_key(key) -> tuple:
        return key

    @classmethod
    def zero(cls) -> "PolyTensor2":
        return cls._raw({})

    def act_left(self, p: Poly) -> "PolyTensor2":
        """p·(a⊗b) = pa⊗b"""
        return PolyTensor2(((n + i, j), c * d) for n, c in p.terms() for (i, j), d in self.items())

    def act_right(self, p: Poly) -> "PolyTensor2":
        """(a⊗b)·p = a⊗bp"""
        return PolyTensor2(((i, j + n), d * c) for (i, j), d in self.items() for n, c in p.terms())


class PolyTensor3(_Combination):
    """k[x]⊗k[x]⊗k[x]，用于余结合律"""

    def _check_key(self, key) -> Tuple[int, int, int]:
        i, j, k = key
        return (int(i), int(j), int(k))

    @staticmethod
    def _sort_key(key) -> tuple:
        return key


def poly_tensor(p: Poly, q: Poly) -> PolyTensor2:
    """p⊗q"""
    return PolyTensor2(((i, j), a * b) for i, a in p.terms() for j, b in q.terms())


def kx_delta(p: Poly) -> PolyTensor2:
    """k[x] 的余乘：Δ(1) = 0，Δ(xⁿ) = Σ_{i=0}^{n−1} x^i⊗x^{n−1−i}"""
    return PolyTensor2(((i, n - 1 - i), c) for n, c in p.terms() for i in range(n))


def kx_derivation(p: Poly) -> Poly:
    """D = m∘Δ，即 D(xⁿ) = n·x^{n−1}"""
    return Poly([n * c for n, c in enumerate(p.coeffs)][1:])


def kx_antipode(p: Poly) -> Poly:
    """闭式对极 S(xⁿ) = −(x−1)ⁿ"""
    result = [Fraction(0)] * len(p.coeffs)
    for n, c in p.terms():
        for k in range(n + 1):
            # (x−1)ⁿ 中 x^k 的系数为 C(n,k)(−1)^{n−k}
            result[k] -= c * math.comb(n, k) * (-1) ** (n - k)
    return Poly(result)


def kx_antipode_series(p: Poly) -> Poly:
    """截断级数 −Σ_k ((−1)^k / k!) D^{∘k}(p)"""
    term = p
    series = p
    for k in range(1, max(p.degree, 0) + 1):
        term = kx_derivation(term)
        series = series + term.scale(Fraction((-1) ** k, math.factorial(k)))
    return -series


def kx_P(p: Poly) -> Poly:
    """余圈算子 P(p) = x·p"""
    return Poly.x() * p


class TargetSpec(ABC):
    """余圈 ε-单位双代数目标：单位、乘法、余乘、算子 P、对极与生成元像

    元素需支持 ``+`` 与 ``scale``，张量元素同样。
    """

    name = "target"

    @abstractmethod
    def unit(self) -> Any:
        ...

    @abstractmethod
    def zero(self) -> Any:
        ...

    @abstractmethod
    def multiply(self, a: Any, b: Any) -> Any:
        ...

    @abstractmethod
    def coproduct(self, a: Any) -> Any:
        ...

    @abstractmethod
    def operator(self, a: Any) -> Any:
        ...

    @abstractmethod
    def antipode(self, a: Any) -> Any:
        ...

    @abstractmethod
    def tensor(self, a: Any, b: Any) -> Any:
        ...

    @abstractmethod
    def generator_image(self, name: str) -> Any:
        ...


class KxTarget(TargetSpec):
    """k[x] 目标，默认对所有生成元取 f(x) = x"""

    name = "kx"

    def __init__(self, images: Optional[Mapping[str, Poly]] = None):
        self.images: Dict[str, Poly] = dict(images or {})

    def unit(self) -> Poly:
        return Poly.one()

    def zero(self) -> Poly:
        return Poly.zero()

    def multiply(self, a: Poly, b: Poly) -> Poly:
        return a * b

    def coproduct(self, a: Poly) -> PolyTensor2:
        return kx_delta(a)

    def operator(self, a: Poly) -> Poly:
        return kx_P(a)

    def antipode(self, a: Poly) -> Poly:
        return kx_antipode(a)

    def tensor(self, a: Poly, b: Poly) -> PolyTensor2:
        return poly_tensor(a, b)

    def generator_image(self, name: str) -> Poly:
        return self.images.get(name, Poly.x())


TARGETS: Dict[str, TargetSpec] = {"kx": KxTarget()}


class UniversalMorphism:
    """自由对象到目标的唯一算子 ε-单位双代数态射 f̄"""

    def __init__(self, target: TargetSpec, alphabet: Optional[Iterable[str]] = None):
        """初始化并登记生成元像

        Args:
            target: 目标代数
            alphabet: 需预先检查的生成元；其余生成元在首次使用时检查

        Raises:
            TargetRegistrationError: 某个生成元像不满足 Δ(f(x)) = 1⊗1
        """
        self.target = target
        self._checked: Dict[str, Any] = {}
        self._cache: Dict[Forest, Any] = {}
        self._lock = threading.Lock()
        for name in alphabet or ():
            self._generator(name)

    def _generator(self, name: str) -> Any:
        with self._lock:
            if name in self._checked:
                return self._checked[name]
        image = self.target.generator_image(name)
        unit = self.target.unit()
        if self.target.coproduct(image) != self.target.tensor(unit, unit):
            raise TargetRegistrationError(
                f"generator image of {name!r} in target {self.target.name!r} violates Delta(f(x)) = 1 (x) 1"
            )
        with self._lock:
            self._checked[name] = image
        return image

    def __call__(self, F: ForestLike) -> Any:
        F = as_forest(F)
        with self._lock:
            cached = self._cache.get(F)
        if cached is not None:
            return cached
        value = self._evaluate(F)
        with self._lock:
            self._cache.setdefault(F, value)
        return value

    def cache_size(self) -> int:
        with self._lock:
            return len(self._cache)

    def clear_cache(self) -> None:
        """清空森林像的缓存；已校验的生成元像保留"""
        with self._lock:
            self._cache.clear()

    def _evaluate(self, F: Forest) -> Any:
        target = self.target
        if F.is_unit:
            return target.unit()
        if len(F.trees) >= 2:
            first, rest = peel(F)
            return target.multiply(self(first), self(rest))
        tree = F.trees[0]
        if tree.label != SIGMA:
            return self._generator(tree.label)
        return target.operator(self(unbplus(F)))

    def on_lincomb(self, v: LinComb) -> Any:
        total = self.target.zero()
        for F, c in v.items():
            total = total + self(F).scale(c)
        return total

    def on_tensor(self, t: Tensor2) -> Any:
        """(f̄⊗f̄)t"""
        zero = self.target.zero()
        total = self.target.tensor(zero, zero)
        for (left, right), c in t.items():
            total = total + self.target.tensor(self(left), self(right)).scale(c)
        return total

    def coproduct_compatible(self, F: ForestLike) -> bool:
        """Δ f̄(F) = (f̄⊗f̄) Δε(F)"""
        return self.target.coproduct(self(F)) == self.on_tensor(delta_eps(F))

    def antipode_compatible(self, F: ForestLike) -> bool:
        """f̄(S(F)) = S(f̄(F))"""
        return self.on_lincomb(antipode(F)) == self.target.antipode(self(F))

    def operated_compatible(self, F: ForestLike) -> bool:
        """单位、乘法与 B⁺ ↦ P 的保持"""
        F = as_forest(F)
        target = self.target
        if self(Forest(())) != target.unit():
            return False
        if not F.is_unit and target.operator(self(F)) != self(bplus(F)):
            return False
        for k in range(1, len(F.trees)):
            left, right = Forest(F.trees[:k]), Forest(F.trees[k:])
            if target.multiply(self(left), self(right)) != self(F):
                return False
        return True

    def check(self, F: ForestLike) -> bool:
        ok = self.coproduct_compatible(F) and self.antipode_compatible(F) and self.operated_compatible(F)
        if not ok:
            logger.debug(f"Morphism compatibility fails on {as_forest(F).key}")
        return ok


_DEFAULT_MORPHISM = UniversalMorphism(TARGETS["kx"])


def get_target(name: str) -> TargetSpec:
    try:
        return TARGETS[name]
    except KeyError:
        raise ForestArgumentError(f"unknown target {name!r}, expected one of {sorted(TARGETS)}")


def phi_bar(F: ForestLike, target: Optional[TargetSpec] = None) -> Any:
    """泛态射 f̄ 的像；默认目标 k[x] 上 f̄(F) = x^{|F|}"""
    if target is None:
        return _DEFAULT_MORPHISM(F)
    return UniversalMorphism(target)(F)


def phi_bar_tensor(t: Tensor2) -> PolyTensor2:
    """k[x] 目标上的 (f̄⊗f̄)"""
    return _DEFAULT_MORPHISM.on_tensor(t)


def morphism_check(F: ForestLike) -> bool:
    """在 k[x] 中检查余乘、对极与算子运算的相容性"""
    return _DEFAULT_MORPHISM.check(F)


def morphism_cache_size() -> int:
    return _DEFAULT_MORPHISM.cache_size()


def clear_caches() -> None:
    _DEFAULT_MORPHISM.clear_cache()
