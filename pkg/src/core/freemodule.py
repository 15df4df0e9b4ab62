#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""森林基上的精确线性代数

LinComb 为 H_ℓ(⋉X) 中的元素，Tensor2/Tensor3 为其二重、三重张量。
系数一律为 Fraction，零系数在构造时即被丢弃。
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Callable, Dict, Iterable, Iterator, Mapping, Tuple, Union

from .exceptions import ForestArgumentError
from .forest import Forest, ForestLike, UNIT, as_forest, concat

Rational = Fraction
Scalar = Union[int, Fraction]


def to_rational(value: Scalar) -> Fraction:
    """转换为精确有理数，拒绝浮点数"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ForestArgumentError("booleans are not coefficients")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError as e:
            raise ForestArgumentError(f"invalid rational {value!r}") from e
    raise ForestArgumentError(f"coefficients must be exact rationals, got {type(value).__name__}")


class _Combination:
    """有限形式和：键 -> 非零有理系数"""

    def __init__(self, terms: Union[Mapping, Iterable[Tuple[object, Scalar]]] = ()):
        coeffs: Dict[object, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, value in items:
            key = self._check_key(key)
            c = coeffs.get(key, Fraction(0)) + to_rational(value)
            if c:
                coeffs[key] = c
            else:
                coeffs.pop(key, None)
        self._coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Dict[object, Fraction]):
        # 调用方保证键已规范且系数非零
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    def _check_key(self, key):
        raise NotImplementedError

    @staticmethod
    def _sort_key(key) -> tuple:
        raise NotImplementedError

    def items(self):
        return self._coeffs.items()

    def sorted_items(self):
        """按规范顺序（顶点数、规范串降序）排列的项"""
        return sorted(self._coeffs.items(), key=lambda item: self._sort_key(item[0]), reverse=True)

    def coefficient(self, key) -> Fraction:
        return self._coeffs.get(self._check_key(key), Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator:
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return type(other) is type(self) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._coeffs.items())))
        return self._hash

    def _accumulate(self, pairs: Iterable[Tuple[object, Fraction]]):
        coeffs = dict(self._coeffs)
        for key, value in pairs:
            c = coeffs.get(key, Fraction(0)) + value
            if c:
                coeffs[key] = c
            else:
                coeffs.pop(key, None)
        return type(self)._raw(coeffs)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if type(other) is not type(self):
            return NotImplemented
        return self._accumulate(other._coeffs.items())

    def __radd__(self, other):
        # 支持 sum()
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return type(self)._raw({key: -c for key, c in self._coeffs.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._accumulate((key, -c) for key, c in other._coeffs.items())

    def scale(self, c: Scalar):
        c = to_rational(c)
        if not c:
            return type(self)._raw({})
        return type(self)._raw({key: c * v for key, v in self._coeffs.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __repr__(self) -> str:
        from .textio import serialize
        return f"{type(self).__name__}({serialize(self)!r})"


class LinComb(_Combination):
    """森林的有理线性组合"""

    def _check_key(self, key) -> Forest:
        return as_forest(key)

    @staticmethod
    def _sort_key(key: Forest) -> tuple:
        return key.sort_key()

    @classmethod
    def of(cls, F: ForestLike, c: Scalar = 1) -> "LinComb":
        return cls({as_forest(F): c})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LinComb":
        return cls._raw({UNIT: Fraction(1)})

    def forests(self) -> Iterable[Forest]:
        return self._coeffs.keys()

    def __mul__(self, other):
        if isinstance(other, LinComb):
            return lc_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def apply(self, fn: Callable[[Forest], "LinComb"]) -> "LinComb":
        """线性延拓：Σ c·fn(F)"""
        coeffs: Dict[Forest, Fraction] = {}
        for F, c in self._coeffs.items():
            for G, d in fn(F).items():
                v = coeffs.get(G, Fraction(0)) + c * d
                if v:
                    coeffs[G] = v
                else:
                    coeffs.pop(G, None)
        return LinComb._raw(coeffs)


class Tensor2(_Combination):
    """H⊗H 中的元素：有序森林对的有理组合"""

    def _check_key(self, key) -> Tuple[Forest, Forest]:
        left, right = key
        return (as_forest(left), as_forest(right))

    @staticmethod
    def _sort_key(key) -> tuple:
        return key[0].sort_key() + key[1].sort_key()

    @classmethod
    def of(cls, left: ForestLike, right: ForestLike, c: Scalar = 1) -> "Tensor2":
        return cls({(left, right): c})

    @classmethod
    def zero(cls) -> "Tensor2":
        return cls._raw({})

    def __mul__(self, other):
        if isinstance(other, Tensor2):
            return t2_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def multiply_legs(self) -> LinComb:
        """乘法 m：B⊗R ↦ B·R"""
        return LinComb((concat(left, right), c) for (left, right), c in self._coeffs.items())


class Tensor3(_Combination):
    """H⊗H⊗H 中的元素，用于验证余结合律"""

    def _check_key(self, key) -> Tuple[Forest, Forest, Forest]:
        a, b, c = key
        return (as_forest(a), as_forest(b), as_forest(c))

    @staticmethod
    def _sort_key(key) -> tuple:
        return key[0].sort_key() + key[1].sort_key() + key[2].sort_key()


def lc_add(u: LinComb, v: LinComb) -> LinComb:
    return u + v


def lc_scale(c: Scalar, v: LinComb) -> LinComb:
    return v.scale(c)


def lc_mul(u: LinComb, v: LinComb) -> LinComb:
    """拼接的双线性延拓，单位元为空森林 1"""
    return LinComb((concat(F, G), a * b) for F, a in u.items() for G, b in v.items())


def tensor(u: LinComb, v: LinComb) -> Tensor2:
    """u⊗v"""
    return Tensor2(((F, G), a * b) for F, a in u.items() for G, b in v.items())


def act_left(a: LinComb, t: Tensor2) -> Tensor2:
    """左作用 a·(b⊗c) = ab⊗c"""
    return Tensor2(((concat(F, left), right), x * c) for F, x in a.items() for (left, right), c in t.items())


def act_right(t: Tensor2, a: LinComb) -> Tensor2:
    """右作用 (b⊗c)·a = b⊗ca"""
    return Tensor2(((left, concat(right, F)), c * x) for (left, right), c in t.items() for F, x in a.items())


def t2_mul(s: Tensor2, t: Tensor2) -> Tensor2:
    """分量乘积 (a⊗b)(c⊗d) = ac⊗bd"""
    return Tensor2(
        ((concat(a, c), concat(b, d)), x * y)
        for (a, b), x in s.items()
        for (c, d), y in t.items()
    )


def expand_left(t: Tensor2, delta: Callable[[Forest], Tensor2]) -> Tensor3:
    """(Δ⊗id)t"""
    return Tensor3(
        ((a, b, right), c * d)
        for (left, right), c in t.items()
        for (a, b), d in delta(left).items()
    )


def expand_right(t: Tensor2, delta: Callable[[Forest], Tensor2]) -> Tensor3:
    """(id⊗Δ)t"""
    return Tensor3(
        ((left, a, b), c * d)
        for (left, right), c in t.items()
        for (a, b), d in delta(right).items()
    )
