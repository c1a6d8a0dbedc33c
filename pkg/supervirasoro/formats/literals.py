"""
基向量、元素与窗口的文本/JSON 表示

    基向量: "L(3/2, 0)"、"G(1/2 + 1*sqrt(2), 2)"、"C"，层数缺省为 0
    元素:   {"terms": [{"basis": "L(1,0)", "coeff": "2"}]}
    窗口:   {"degree_coord_bound": 2, "i_max": 4} 或 {"degrees": ["0", "1", "-1"], "i_max": 2}
"""
import re
from typing import Any, Dict, List, Mapping

from supervirasoro.algebra.basis import BasisVector, Kind
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window, WindowError
from supervirasoro.field.literals import LiteralParseError, parse_scalar
from supervirasoro.field.quadratic import QuadExtScalar
from supervirasoro.grading.index_group import Coset, GroupElement, IndexGroup


_BASIS = re.compile(r"^\s*(?P<kind>[LG])\s*\((?P<body>.*)\)\s*$")


def parse_degree(text: str, group: IndexGroup) -> GroupElement:
    """
    Raises:
        LiteralParseError / FieldMismatchError: 字面量不合法
        WindowError: 不属于 Ω
    """
    g = group.member(parse_scalar(text, group.field), Coset.OMEGA)
    if g is None:
        raise WindowError(f"次数 {text!r} 不属于 Ω")
    return g


def parse_basis(text: str, algebra: SuperAlgebra) -> BasisVector:
    """
    解析基向量字面量

    Raises:
        LiteralParseError: 语法错误
        BasisError / VariantError: 指标不合法或变体中不存在
    """
    if not isinstance(text, str):
        raise LiteralParseError(str(text), str(text), 1)
    if text.strip() == "C":
        return algebra.C()
    match = _BASIS.match(text)
    if match is None:
        raise LiteralParseError(text, text.strip(), 1)
    body = match.group("body")
    level = 0
    if "," in body:
        degree_text, level_text = body.rsplit(",", 1)
        level_text = level_text.strip()
        if not re.fullmatch(r"\d+", level_text):
            raise LiteralParseError(text, level_text, text.index(level_text) + 1)
        level = int(level_text)
    else:
        degree_text = body
    degree = parse_scalar(degree_text, algebra.field)
    if match.group("kind") == Kind.L.value:
        return algebra.L(degree, level)
    return algebra.G(degree, level)


def format_basis(algebra: SuperAlgebra, b: BasisVector) -> str:
    return algebra.format_vector(b)


def parse_element(data: Any, algebra: SuperAlgebra) -> Element:
    """
    Raises:
        ValueError: 结构不对或字面量不合法
    """
    if not isinstance(data, Mapping) or not isinstance(data.get("terms"), list):
        raise ValueError('元素应为 {"terms": [{"basis": ..., "coeff": ...}]}')
    pairs = []
    for term in data["terms"]:
        if not isinstance(term, Mapping) or "basis" not in term:
            raise ValueError(f"元素项缺少 basis: {term!r}")
        b = parse_basis(term["basis"], algebra)
        coeff = parse_scalar(str(term.get("coeff", "1")), algebra.field)
        pairs.append((b, coeff))
    return algebra.element(pairs)


def element_to_json(algebra: SuperAlgebra, x: Element) -> Dict[str, List[Dict[str, str]]]:
    return {
        "terms": [
            {"basis": algebra.format_vector(b), "coeff": str(c)}
            for b, c in x.terms
        ]
    }


def parse_window(data: Any, group: IndexGroup) -> Window:
    """
    Raises:
        WindowError: 结构不对或窗口不合法
    """
    if not isinstance(data, Mapping):
        raise WindowError("窗口应为 JSON 对象")
    if "i_max" not in data:
        raise WindowError("窗口缺少 i_max")
    i_max = data["i_max"]
    if not isinstance(i_max, int) or isinstance(i_max, bool):
        raise WindowError(f"i_max 应为整数，收到 {i_max!r}")
    if "degree_coord_bound" in data:
        bound = data["degree_coord_bound"]
        if not isinstance(bound, int) or isinstance(bound, bool):
            raise WindowError(f"degree_coord_bound 应为整数，收到 {bound!r}")
        return Window.from_bound(group.rank, bound, i_max)
    if "degrees" in data:
        degrees = [parse_degree(str(t), group) for t in data["degrees"]]
        return Window.from_degrees(degrees, i_max)
    raise WindowError("窗口需要 degree_coord_bound 或 degrees")


def window_to_json(group: IndexGroup, window: Window) -> Dict[str, Any]:
    return {
        "degrees": [group.format(g) for g in window.sorted_degrees()],
        "i_max": window.i_max,
    }


def parse_basis_values(
    data: Any,
    group: IndexGroup,
    default: QuadExtScalar,
) -> List[QuadExtScalar]:
    """
    以 Ω 规范基元素为键的取值表，如 {"1/2": "3", "sqrt(2)": "0"}；缺省键取 default

    Raises:
        ValueError: 键不是规范基元素
    """
    if not isinstance(data, Mapping):
        raise ValueError("取值表应为 JSON 对象")
    values = [default] * group.rank
    basis = group.canonical_basis
    for key, value in data.items():
        x = parse_scalar(str(key), group.field)
        if x not in basis:
            names = ", ".join(str(b) for b in basis)
            raise ValueError(f"键 {key!r} 不是 Ω 的规范基元素（规范基: {names}）")
        values[basis.index(x)] = parse_scalar(str(value), group.field)
    return values


def basis_values_to_json(group: IndexGroup, values) -> Dict[str, str]:
    return {str(b): str(v) for b, v in zip(group.canonical_basis, values)}
