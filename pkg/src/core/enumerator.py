#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""F_ℓ(⋉X) 中森林的穷举与计数

森林以惰性生成器给出，同一顶点数内按规范串的字典序排列。
"""

from functools import lru_cache
from typing import Iterable, Iterator, List, Tuple

from .exceptions import ForestArgumentError
from .forest import SIGMA, UNIT, Forest, Tree, check_decoration


def _normalize_alphabet(alphabet: Iterable[str]) -> Tuple[str, ...]:
    names = []
    for name in alphabet:
        if name == SIGMA:
            raise ForestArgumentError("'@' is reserved and cannot be an alphabet letter")
        check_decoration(name)
        if name not in names:
            names.append(name)
    return tuple(sorted(names))


def _check_size(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ForestArgumentError(f"vertex count must be a natural number, got {n!r}")


@lru_cache(maxsize=None)
def _trees(n: int, alphabet: Tuple[str, ...]) -> Tuple[Tree, ...]:
    if n == 1:
        trees = [Tree(label) for label in (SIGMA,) + alphabet]
    else:
        trees = [Tree(SIGMA, F.trees) for F in _forests(n - 1, alphabet)]
    return tuple(sorted(trees, key=lambda tree: tree.key))


@lru_cache(maxsize=None)
def _trees_up_to(n: int, alphabet: Tuple[str, ...]) -> Tuple[Tree, ...]:
    # 森林串的首棵树决定了它在字典序中的位置，因此首树需跨大小合并排序
    trees: List[Tree] = []
    for k in range(1, n + 1):
        trees.extend(_trees(k, alphabet))
    return tuple(sorted(trees, key=lambda tree: tree.key))


def _iter_forests(n: int, alphabet: Tuple[str, ...]) -> Iterator[Forest]:
    if n == 0:
        yield UNIT
        return
    for first in _trees_up_to(n, alphabet):
        for rest in _iter_forests(n - first.vertex_count, alphabet):
            yield Forest((first,) + rest.trees)


@lru_cache(maxsize=None)
def _forests(n: int, alphabet: Tuple[str, ...]) -> Tuple[Forest, ...]:
    return tuple(_iter_forests(n, alphabet))


def enumerate_forests(n: int, alphabet: Iterable[str] = ()) -> Iterator[Forest]:
    """生成恰有 n 个顶点的全部森林

    Args:
        n: 顶点数
        alphabet: 生成元集合 X，可为空

    Returns:
        按规范串排序、无重复的森林生成器

    Raises:
        ForestArgumentError: n 为负或字母表含保留字
    """
    _check_size(n)
    return _iter_forests(n, _normalize_alphabet(alphabet))


def enumerate_up_to(max_vertices: int, alphabet: Iterable[str] = ()) -> Iterator[Forest]:
    """按顶点数递增依次生成 0..max_vertices 的全部森林"""
    _check_size(max_vertices)
    letters = _normalize_alphabet(alphabet)
    for n in range(max_vertices + 1):
        yield from _iter_forests(n, letters)


def enumerate_pairs(max_total: int, alphabet: Iterable[str] = ()) -> Iterator[Tuple[Forest, Forest]]:
    """生成 |F₁| + |F₂| ≤ max_total 的全部有序对，按总顶点数递增"""
    _check_size(max_total)
    letters = _normalize_alphabet(alphabet)
    for total in range(max_total + 1):
        for k in range(total + 1):
            for left in _iter_forests(k, letters):
                for right in _iter_forests(total - k, letters):
                    yield left, right


def count(n: int, alphabet_size: int) -> int:
    """n 个顶点的森林个数

    t(1) = |X| + 1，t(k) = f(k−1)（k ≥ 2），f(0) = 1，f(n) = Σ_{k=1}^{n} t(k)·f(n−k)。
    """
    _check_size(n)
    _check_size(alphabet_size)
    f = [1]
    for m in range(1, n + 1):
        total = 0
        for k in range(1, m + 1):
            t = alphabet_size + 1 if k == 1 else f[k - 1]
            total += t * f[m - k]
        f.append(total)
    return f[n]


def counts_up_to(max_vertices: int, alphabet_size: int) -> List[int]:
    return [count(n, alphabet_size) for n in range(max_vertices + 1)]


def clear_caches() -> None:
    for cached in (_trees, _trees_up_to, _forests):
        cached.cache_clear()
