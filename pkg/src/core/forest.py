#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""带装饰的平面有根树与森林

顶点装饰取自 X ⊔ {σ}，σ 记作 "@"，X 中的生成元只能装饰叶子。
空森林 1 是拼接运算的单位元。
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .exceptions import ForestArgumentError, ForestFormatError
from .utils import is_identifier

SIGMA = "@"
UNIT_TOKEN = "1"
RESERVED_TOKENS = (SIGMA, UNIT_TOKEN)


def check_decoration(label: str) -> str:
    """检查装饰是否合法

    Args:
        label: σ（"@"）或生成元名

    Returns:
        原样返回合法的装饰

    Raises:
        ForestFormatError: 保留字或非法标识符
    """
    if label == SIGMA:
        return label
    if not isinstance(label, str) or label == UNIT_TOKEN or not is_identifier(label):
        raise ForestFormatError(f"invalid decoration {label!r}")
    return label


@dataclass(frozen=True, eq=False)
class Tree:
    """平面有根树：根装饰加上从左到右的子树序列"""

    label: str
    children: Tuple["Tree", ...] = ()

    def __post_init__(self):
        check_decoration(self.label)
        object.__setattr__(self, "children", tuple(self.children))
        if self.children and self.label != SIGMA:
            raise ForestFormatError("generator label on internal vertex")

    @cached_property
    def key(self) -> str:
        """规范序列化字符串，用作相等、哈希与排序的依据"""
        if not self.children:
            return self.label
        return f"{self.label}[{' '.join(child.key for child in self.children)}]"

    @cached_property
    def vertex_count(self) -> int:
        return 1 + sum(child.vertex_count for child in self.children)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self.key == other.key

    def __hash__(self) -> int:
        return hash(("tree", self.key))

    def __repr__(self) -> str:
        return f"Tree({self.key!r})"


@dataclass(frozen=True)
class VertexRef:
    """森林中的一个顶点

    index 是该顶点在 ≤h,l 线性序中的位置，也是顶点的规范标识；
    planar 是从左到右先序遍历中的位置。
    """

    index: int
    label: str
    planar: int
    depth: int


@dataclass(frozen=True)
class _Layout:
    """森林的扁平化结构，顶点按从左到右的先序编号"""

    labels: Tuple[str, ...]
    parents: Tuple[Optional[int], ...]
    children: Tuple[Tuple[int, ...], ...]
    depths: Tuple[int, ...]
    hl: Tuple[int, ...]          # ≤h,l 序中第 k 个顶点的先序编号
    hl_rank: Tuple[int, ...]     # 先序编号 -> ≤h,l 序中的位置


@dataclass(frozen=True, eq=False)
class Forest:
    """平面有根森林：树的有序序列，空序列即单位元 1"""

    trees: Tuple[Tree, ...] = field(default=())

    def __post_init__(self):
        trees = tuple(self.trees)
        for tree in trees:
            if not isinstance(tree, Tree):
                raise ForestArgumentError(f"forest components must be trees, got {type(tree).__name__}")
        object.__setattr__(self, "trees", trees)

    @classmethod
    def of(cls, *trees: Tree) -> "Forest":
        return cls(tuple(trees))

    @cached_property
    def key(self) -> str:
        """规范序列化字符串；空森林为 "1" """
        if not self.trees:
            return UNIT_TOKEN
        return " ".join(tree.key for tree in self.trees)

    @cached_property
    def vertex_count(self) -> int:
        return sum(tree.vertex_count for tree in self.trees)

    @property
    def is_unit(self) -> bool:
        return not self.trees

    @cached_property
    def layout(self) -> _Layout:
        return _build_layout(self)

    def sort_key(self) -> Tuple[int, str]:
        return (self.vertex_count, self.key)

    def __eq__(self, other) -> bool:
        return isinstance(other, Forest) and self.key == other.key

    def __hash__(self) -> int:
        return hash(("forest", self.key))

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def __repr__(self) -> str:
        return f"Forest({self.key!r})"


ForestLike = Union[Tree, Forest]

UNIT = Forest(())


def as_forest(value: ForestLike) -> Forest:
    """把单棵树视为宽度为 1 的森林"""
    if isinstance(value, Forest):
        return value
    if isinstance(value, Tree):
        return Forest((value,))
    raise ForestArgumentError(f"expected Tree or Forest, got {type(value).__name__}")


def leaf(d: str) -> Tree:
    """单顶点树

    Args:
        d: 装饰，σ 或生成元名

    Returns:
        以 d 装饰的单顶点树
    """
    return Tree(check_decoration(d))


def bplus(F: ForestLike) -> Tree:
    """嫁接算子 B⁺：新增 σ 根，F 的各树依次成为其子树"""
    return Tree(SIGMA, as_forest(F).trees)


def unbplus(T: ForestLike) -> Forest:
    """B⁺ 的左逆：删除 σ 根，返回其子树组成的森林

    Raises:
        ForestArgumentError: 输入不是以 σ 为根的单棵树
    """
    F = as_forest(T)
    if len(F.trees) != 1 or F.trees[0].label != SIGMA:
        raise ForestArgumentError(f"{F.key!r} is not in the image of B+")
    return Forest(F.trees[0].children)


def concat(F: ForestLike, G: ForestLike) -> Forest:
    """拼接：F 的树之后接 G 的树"""
    return Forest(as_forest(F).trees + as_forest(G).trees)


def concat_all(forests: Iterable[ForestLike]) -> Forest:
    trees: List[Tree] = []
    for F in forests:
        trees.extend(as_forest(F).trees)
    return Forest(tuple(trees))


def peel(F: ForestLike) -> Tuple[Forest, Forest]:
    """拆出第一棵树：F = T₁ · (T₂…T_m)

    Raises:
        ForestArgumentError: F 为空森林
    """
    F = as_forest(F)
    if F.is_unit:
        raise ForestArgumentError("cannot peel the empty forest")
    return Forest(F.trees[:1]), Forest(F.trees[1:])


def _tree_depth(tree: Tree) -> int:
    if not tree.children and tree.label != SIGMA:
        return 0
    # σ 叶子即 B⁺(1)
    return 1 + max((_tree_depth(child) for child in tree.children), default=0)


def depth(F: ForestLike) -> int:
    """深度：1 与 •x 为 0，dep(B⁺(G)) = dep(G)+1，森林取各树最大值"""
    return max((_tree_depth(tree) for tree in as_forest(F).trees), default=0)


def breadth(F: ForestLike) -> int:
    """宽度：树的个数，bre(1) = 0"""
    return len(as_forest(F).trees)


def vertex_count(F: ForestLike) -> int:
    return as_forest(F).vertex_count


def validate(F: ForestLike) -> bool:
    """检查叶子装饰规则（X 中的装饰只出现在叶子上）

    Raises:
        ForestFormatError: 存在带子树的生成元顶点或非法装饰
    """
    stack = list(as_forest(F).trees)
    while stack:
        tree = stack.pop()
        check_decoration(tree.label)
        if tree.children and tree.label != SIGMA:
            raise ForestFormatError("generator label on internal vertex")
        stack.extend(tree.children)
    return True


def _build_layout(F: Forest) -> _Layout:
    labels: List[str] = []
    parents: List[Optional[int]] = []
    children: List[List[int]] = []
    depths: List[int] = []
    roots: List[int] = []

    def visit(tree: Tree, parent: Optional[int], level: int) -> int:
        index = len(labels)
        labels.append(tree.label)
        parents.append(parent)
        children.append([])
        depths.append(level)
        for child in tree.children:
            children[index].append(visit(child, index, level + 1))
        return index

    for tree in F.trees:
        roots.append(visit(tree, None, 0))

    # ≤h,l：树从右到左，树内先根，子树从右到左
    hl: List[int] = []

    def emit(index: int) -> None:
        hl.append(index)
        for child in reversed(children[index]):
            emit(child)

    for root in reversed(roots):
        emit(root)

    hl_rank = [0] * len(labels)
    for rank, index in enumerate(hl):
        hl_rank[index] = rank

    return _Layout(
        labels=tuple(labels),
        parents=tuple(parents),
        children=tuple(tuple(c) for c in children),
        depths=tuple(depths),
        hl=tuple(hl),
        hl_rank=tuple(hl_rank),
    )


def hl_order(F: ForestLike) -> List[VertexRef]:
    """按 ≤h,l 严格递增的顺序列出所有顶点

    Returns:
        顶点列表，第 k 个元素的 index 为 k；空森林返回空列表
    """
    layout = as_forest(F).layout
    return [
        VertexRef(index=rank, label=layout.labels[p], planar=p, depth=layout.depths[p])
        for rank, p in enumerate(layout.hl)
    ]


def induced_subforest(F: ForestLike, members: Iterable[int]) -> Forest:
    """由先序编号集合诱导的子森林

    各连通分支按其根在原森林中从左到右的先序位置排列。
    """
    layout = as_forest(F).layout
    keep = set(members)

    def build(index: int) -> Tree:
        return Tree(layout.labels[index], tuple(build(c) for c in layout.children[index] if c in keep))

    roots = [
        p for p in range(len(layout.labels))
        if p in keep and (layout.parents[p] is None or layout.parents[p] not in keep)
    ]
    return Forest(tuple(build(p) for p in roots))


def split_at(F: ForestLike, a: Union[VertexRef, int]) -> Tuple[Forest, Forest]:
    """在顶点 a 处拆分森林

    Args:
        F: 森林
        a: 顶点引用或其在 ≤h,l 序中的位置

    Returns:
        (Bₐ, Rₐ)：分别由严格大于、严格小于 a 的顶点诱导的子森林

    Raises:
        ForestArgumentError: 顶点引用越界
    """
    F = as_forest(F)
    k = a.index if isinstance(a, VertexRef) else a
    n = F.vertex_count
    if not isinstance(k, int) or not 0 <= k < n:
        raise ForestArgumentError(f"vertex reference {k} out of range for a forest with {n} vertices")
    layout = F.layout
    above = [p for p in range(n) if layout.hl_rank[p] > k]
    below = [p for p in range(n) if layout.hl_rank[p] < k]
    return induced_subforest(F, above), induced_subforest(F, below)


def all_splits(F: ForestLike) -> List[Tuple[Forest, Forest]]:
    """按 ≤h,l 序列出所有 (Bₐ, Rₐ)"""
    F = as_forest(F)
    return [split_at(F, k) for k in range(F.vertex_count)]


def tree_sequence(F: ForestLike) -> Sequence[Forest]:
    """把森林拆成单树森林的序列"""
    return [Forest((tree,)) for tree in as_forest(F).trees]

