#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""森林表达式的解析、规范序列化与 JSON 交换格式

文本语法（空白分隔）:
    forest  := "1" | tree (tree)*
    tree    := label [ "[" tree* "]" ]
    label   := "@" | IDENT
    term    := [NUMBER "*"] forest        单独的 NUMBER 表示 NUMBER · 1
    lincomb := ["-"] term (("+" | "-") term)*
    tensor  := ["-"] [NUMBER "*"] forest "(x)" forest (("+" | "-") ...)*
"""

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

from .exceptions import ForestDecodeError, ForestFormatError, ForestHopfError
from .forest import SIGMA, UNIT, UNIT_TOKEN, Forest, ForestLike, Tree, as_forest
from .freemodule import LinComb, Tensor2, Tensor3
from .utils import logger

TENSOR_SEPARATOR = " (x) "

_TOKEN_RE = re.compile(
    r"""
    (?P<WS>\s+)
  | (?P<OTIMES>\(x\))
  | (?P<NUMBER>[0-9]+(?:/[0-9]+)?)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<SIGMA>@)
  | (?P<LBRACKET>\[)
  | (?P<RBRACKET>\])
  | (?P<PLUS>\+)
  | (?P<MINUS>-)
  | (?P<STAR>\*)
    """,
    re.VERBOSE,
)

_COEFF_RE = re.compile(r"^-?[0-9]+(?:/[0-9]+)?$")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(source: str) -> List[Token]:
    """把源文本切分为记号，末尾附加 END 记号

    Raises:
        ForestFormatError: 出现无法识别的字符
    """
    tokens: List[Token] = []
    position = 0
    while position < len(source):
        match = _TOKEN_RE.match(source, position)
        if match is None:
            raise ForestFormatError(f"unexpected character {source[position]!r}", source, position)
        if match.lastgroup != "WS":
            tokens.append(Token(match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(Token("END", "", len(source)))
    return tokens


class _Parser:
    """递归下降解析器，每个实例只解析一段源文本"""

    def __init__(self, source: str):
        if not isinstance(source, str):
            raise ForestFormatError(f"expected text, got {type(source).__name__}")
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message: str, token: Optional[Token] = None) -> ForestFormatError:
        token = token or self.current
        return ForestFormatError(message, self.source, token.position)

    def _expect(self, kind: str, what: str) -> Token:
        if self.current.kind != kind:
            found = self.current.text or "end of input"
            raise self._error(f"expected {what}, found {found!r}")
        return self._advance()

    def expect_end(self) -> None:
        self._expect("END", "end of input")

    def tree(self) -> Tree:
        token = self.current
        if token.kind == "SIGMA":
            self._advance()
            label = SIGMA
        elif token.kind == "IDENT":
            self._advance()
            label = token.text
        else:
            raise self._error(f"expected a vertex label, found {token.text or 'end of input'!r}")

        children: List[Tree] = []
        if self.current.kind == "LBRACKET":
            self._advance()
            while self.current.kind in ("SIGMA", "IDENT"):
                children.append(self.tree())
            self._expect("RBRACKET", "']'")
            if children and label != SIGMA:
                raise self._error("generator label on internal vertex", token)
        return Tree(label, tuple(children))

    def forest(self) -> Forest:
        token = self.current
        if token.kind == "NUMBER":
            if token.text != UNIT_TOKEN:
                raise self._error(f"expected a forest, found number {token.text!r}")
            self._advance()
            return UNIT
        trees = [self.tree()]
        while self.current.kind in ("SIGMA", "IDENT"):
            trees.append(self.tree())
        return Forest(tuple(trees))

    def _coefficient(self) -> Tuple[Fraction, bool]:
        """读取可选的 "NUMBER *" 前缀；返回 (系数, 是否为单独的数)"""
        token = self.current
        if token.kind != "NUMBER":
            return Fraction(1), False
        if self.tokens[self.index + 1].kind == "STAR":
            self.index += 2
            return _parse_number(token, self), False
        if token.text == UNIT_TOKEN:
            return Fraction(1), False
        self._advance()
        return _parse_number(token, self), True

    def _signed_terms(self, term: Callable[[], Tuple[Any, Fraction]]) -> List[Tuple[Any, Fraction]]:
        sign = 1
        if self.current.kind == "MINUS":
            self._advance()
            sign = -1
        terms = []
        while True:
            key, c = term()
            terms.append((key, sign * c))
            if self.current.kind == "PLUS":
                sign = 1
            elif self.current.kind == "MINUS":
                sign = -1
            else:
                return terms
            self._advance()

    def lincomb(self) -> LinComb:
        def term():
            c, bare = self._coefficient()
            return (UNIT if bare else self.forest()), c

        return LinComb(self._signed_terms(term))

    def tensor2(self) -> Tensor2:
        if self.current.kind == "NUMBER" and self.current.text == "0" and self.tokens[self.index + 1].kind == "END":
            self._advance()
            return Tensor2.zero()

        def term():
            c, bare = self._coefficient()
            if bare:
                raise self._error("a tensor term needs two legs")
            left = self.forest()
            self._expect("OTIMES", "'(x)'")
            right = self.forest()
            return (left, right), c

        return Tensor2(self._signed_terms(term))


def _parse_number(token: Token, parser: _Parser) -> Fraction:
    try:
        return Fraction(token.text)
    except ZeroDivisionError:
        raise parser._error("zero denominator in coefficient", token)


def parse_forest(source: str) -> Forest:
    """解析森林表达式

    Args:
        source: 如 "@[y @[x]]"，"1" 为空森林

    Returns:
        通过叶子装饰规则校验的森林

    Raises:
        ForestFormatError: 语法错误或带子树的生成元顶点，附行列位置
    """
    parser = _Parser(source)
    F = parser.forest()
    parser.expect_end()
    logger.debug(f"Parsed forest {F.key}")
    return F


def parse_lincomb(source: str) -> LinComb:
    """解析线性组合，如 "3/2 * x + @" 或 "- 1"；"0" 为零元"""
    parser = _Parser(source)
    v = parser.lincomb()
    parser.expect_end()
    return v


def parse_tensor2(source: str) -> Tensor2:
    """解析二重张量，如 "x (x) 1 + 1 (x) @"；"0" 为零张量"""
    parser = _Parser(source)
    t = parser.tensor2()
    parser.expect_end()
    return t


def serialize_forest(F: ForestLike) -> str:
    return as_forest(F).key


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_terms(terms: Iterable[Tuple[str, Fraction]], bare_constant: Optional[str] = None) -> str:
    """按给定顺序拼接 "c * body" 项；bare_constant 对应的项只打印系数"""
    parts: List[str] = []
    for body, c in terms:
        magnitude = abs(c)
        if body == bare_constant:
            text = _format_coefficient(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{_format_coefficient(magnitude)} * {body}"
        if not parts:
            parts.append(f"- {text}" if c < 0 else text)
        else:
            parts.append(f"- {text}" if c < 0 else f"+ {text}")
    return " ".join(parts) if parts else "0"


def serialize_lincomb(v: LinComb) -> str:
    """规范形式：按 (顶点数, 规范串) 降序排列"""
    return _join_terms((F.key, c) for F, c in v.sorted_items())


def serialize_tensor2(t: Tensor2) -> str:
    return _join_terms((f"{left.key}{TENSOR_SEPARATOR}{right.key}", c) for (left, right), c in t.sorted_items())


def serialize_tensor3(t: Tensor3) -> str:
    return _join_terms((TENSOR_SEPARATOR.join(F.key for F in key), c) for key, c in t.sorted_items())


def _monomial(n: int) -> str:
    if n == 0:
        return UNIT_TOKEN
    return "x" if n == 1 else f"x^{n}"


def serialize_poly(p) -> str:
    """降幂排列，如 "- x^2 + 2 * x - 1" """
    terms = sorted(p.terms(), reverse=True)
    return _join_terms(((_monomial(n), c) for n, c in terms), bare_constant=UNIT_TOKEN)


def serialize_poly_tensor(t) -> str:
    return _join_terms(
        (f"{_monomial(i)}{TENSOR_SEPARATOR}{_monomial(j)}", c) for (i, j), c in t.sorted_items()
    )


def serialize(value: Any) -> str:
    """按值的类型选择规范序列化"""
    from .poly_model import Poly, PolyTensor2

    if isinstance(value, (Forest, Tree)):
        return serialize_forest(value)
    if isinstance(value, LinComb):
        return serialize_lincomb(value)
    if isinstance(value, Tensor2):
        return serialize_tensor2(value)
    if isinstance(value, Tensor3):
        return serialize_tensor3(value)
    if isinstance(value, Poly):
        return serialize_poly(value)
    if isinstance(value, PolyTensor2):
        return serialize_poly_tensor(value)
    raise ForestHopfError(f"cannot serialize {type(value).__name__}")


# ---------------------------------------------------------------- JSON


def _tree_to_obj(tree: Tree) -> Dict[str, Any]:
    return {"label": tree.label, "children": [_tree_to_obj(child) for child in tree.children]}


def _forest_to_obj(F: ForestLike) -> List[Dict[str, Any]]:
    return [_tree_to_obj(tree) for tree in as_forest(F).trees]


def _coeff_to_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def to_obj(value: Any) -> Union[list, dict]:
    """转换为可 JSON 化的对象"""
    from .poly_model import Poly

    if isinstance(value, (Forest, Tree)):
        return _forest_to_obj(value)
    if isinstance(value, LinComb):
        return {"terms": [{"coeff": _coeff_to_str(c), "forest": _forest_to_obj(F)} for F, c in value.sorted_items()]}
    if isinstance(value, Tensor2):
        return {
            "terms": [
                {"coeff": _coeff_to_str(c), "left": _forest_to_obj(left), "right": _forest_to_obj(right)}
                for (left, right), c in value.sorted_items()
            ]
        }
    if isinstance(value, Poly):
        return {"coeffs": [_coeff_to_str(c) for c in value.coeffs]}
    raise ForestHopfError(f"cannot encode {type(value).__name__} as JSON")


def to_json(value: Any) -> str:
    """JSON 交换格式，键顺序固定，便于逐字节比较"""
    return json.dumps(to_obj(value), ensure_ascii=True, separators=(",", ":"))


def _tree_from_obj(obj: Any, path: str) -> Tree:
    if not isinstance(obj, dict) or set(obj) != {"label", "children"}:
        raise ForestDecodeError(f"{path}: a tree must be an object with exactly 'label' and 'children'")
    label, children = obj["label"], obj["children"]
    if not isinstance(label, str):
        raise ForestDecodeError(f"{path}.label: expected a string")
    if not isinstance(children, list):
        raise ForestDecodeError(f"{path}.children: expected an array")
    subtrees = tuple(_tree_from_obj(child, f"{path}.children[{i}]") for i, child in enumerate(children))
    try:
        return Tree(label, subtrees)
    except ForestFormatError as e:
        raise ForestDecodeError(f"{path}: {e}") from e


def _forest_from_obj(obj: Any, path: str) -> Forest:
    if not isinstance(obj, list):
        raise ForestDecodeError(f"{path}: a forest must be an array of trees")
    return Forest(tuple(_tree_from_obj(tree, f"{path}[{i}]") for i, tree in enumerate(obj)))


def _coeff_from_obj(obj: Any, path: str) -> Fraction:
    if not isinstance(obj, str) or not _COEFF_RE.match(obj):
        raise ForestDecodeError(f"{path}: coefficient must be a 'p/q' string")
    try:
        return Fraction(obj)
    except ZeroDivisionError as e:
        raise ForestDecodeError(f"{path}: zero denominator") from e


def _terms_from_obj(obj: Dict[str, Any], kind: Optional[str]) -> Union[LinComb, Tensor2]:
    terms = obj["terms"]
    if not isinstance(terms, list):
        raise ForestDecodeError("terms: expected an array")
    if kind is None:
        # 空的 terms 无法区分类型，默认视为线性组合
        kind = "tensor" if terms and isinstance(terms[0], dict) and "left" in terms[0] else "lincomb"
    expected = {"coeff", "left", "right"} if kind == "tensor" else {"coeff", "forest"}
    pairs = []
    for i, term in enumerate(terms):
        path = f"terms[{i}]"
        if not isinstance(term, dict) or set(term) != expected:
            raise ForestDecodeError(f"{path}: expected keys {sorted(expected)}")
        c = _coeff_from_obj(term["coeff"], f"{path}.coeff")
        if kind == "tensor":
            key = (_forest_from_obj(term["left"], f"{path}.left"), _forest_from_obj(term["right"], f"{path}.right"))
        else:
            key = _forest_from_obj(term["forest"], f"{path}.forest")
        pairs.append((key, c))
    return Tensor2(pairs) if kind == "tensor" else LinComb(pairs)


def from_obj(obj: Any, kind: Optional[str] = None) -> Any:
    """to_obj 的逆

    Args:
        obj: JSON 解码后的对象
        kind: 可选的 "forest"、"lincomb"、"tensor" 或 "poly"，用于消除空 terms 的歧义

    Raises:
        ForestDecodeError: 结构不符合交换格式
    """
    from .poly_model import Poly

    if kind not in (None, "forest", "lincomb", "tensor", "poly"):
        raise ForestDecodeError(f"unknown JSON kind {kind!r}")
    if isinstance(obj, list) and kind in (None, "forest"):
        return _forest_from_obj(obj, "$")
    if isinstance(obj, dict) and set(obj) == {"terms"} and kind in (None, "lincomb", "tensor"):
        return _terms_from_obj(obj, kind)
    if isinstance(obj, dict) and set(obj) == {"coeffs"} and kind in (None, "poly"):
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list):
            raise ForestDecodeError("coeffs: expected an array")
        return Poly([_coeff_from_obj(c, f"coeffs[{i}]") for i, c in enumerate(coeffs)])
    raise ForestDecodeError(f"JSON value does not match the {kind or 'forest/lincomb/tensor'} schema")


def from_json(text: str, kind: Optional[str] = None) -> Any:
    """解析 to_json 的输出"""
    try:
        obj = json.loads(text)
    except (TypeError, json.JSONDecodeError) as e:
        raise ForestDecodeError(f"invalid JSON: {e}") from e
    return from_obj(obj, kind)
