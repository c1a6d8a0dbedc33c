"""
输入文件解码：元素、导子、自同构、上闭链
所有错误都转换为 InputFileError，定位到文件、行号和出错的记号
"""
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple

from supervirasoro.algebra.basis import BasisVector, Parity
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.automorphisms.params import AutParams
from supervirasoro.cohomology.cocycle import (
    Coboundary,
    CocycleSpec,
    LinearFunctional,
    TableCocycle,
    svir_central_cocycle,
)
from supervirasoro.derivations.operations import inner_table, phi_table
from supervirasoro.derivations.table import DerivationTable
from supervirasoro.field.literals import LiteralParseError, parse_scalar
from supervirasoro.formats.literals import (
    parse_basis,
    parse_basis_values,
    parse_degree,
    parse_element,
    parse_window,
)
from supervirasoro.grading.functionals import Character, HomZ
from supervirasoro.utils.file_utils import InputFileError, JsonDocument


@contextmanager
def located(doc: JsonDocument, token: Optional[str] = None) -> Iterator[None]:
    """把块内的 ValueError 转成带位置的 InputFileError"""
    try:
        yield
    except InputFileError:
        raise
    except LiteralParseError as exc:
        raise doc.error(str(exc), exc.text if token is None else token) from exc
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise doc.error(str(exc), token) from exc


def _mapping(doc: JsonDocument, data: Any, what: str) -> Mapping:
    if not isinstance(data, Mapping):
        raise doc.error(f"{what} 应为 JSON 对象")
    return data


def _first_literal(data: Any) -> Optional[str]:
    """元素 JSON 中第一个基向量字面量，用于定位"""
    if isinstance(data, Mapping):
        for term in data.get("terms", []) or []:
            if isinstance(term, Mapping) and isinstance(term.get("basis"), str):
                return term["basis"]
    return None


def decode_element(doc: JsonDocument, algebra: SuperAlgebra, data: Any = None) -> Element:
    data = doc.data if data is None else data
    if isinstance(data, Mapping):
        for term in data.get("terms", []) or []:
            if isinstance(term, Mapping):
                for key in ("basis", "coeff"):
                    if key in term:
                        with located(doc, str(term[key])):
                            if key == "basis":
                                parse_basis(term[key], algebra)
                            else:
                                parse_scalar(str(term[key]), algebra.field)
    with located(doc, _first_literal(data)):
        return parse_element(data, algebra)


def decode_window(doc: JsonDocument, algebra: SuperAlgebra, data: Any = None) -> Window:
    data = doc.data if data is None else data
    with located(doc, "i_max"):
        return parse_window(data, algebra.group)


def _decode_table(doc: JsonDocument, algebra: SuperAlgebra, data: Mapping, window: Window) -> DerivationTable:
    with located(doc, str(data.get("parity", "even"))):
        parity = Parity.parse(str(data.get("parity", "even")))
    degree = None
    if data.get("degree") is not None:
        with located(doc, str(data["degree"])):
            degree = parse_degree(str(data["degree"]), algebra.group)
    zero = algebra.zero()
    images: Dict[BasisVector, Element] = {b: zero for b in algebra.window_basis(window)}
    entries = data.get("images", [])
    if not isinstance(entries, list):
        raise doc.error("images 应为列表", "images")
    for entry in entries:
        entry = _mapping(doc, entry, "images 的条目")
        with located(doc, str(entry.get("basis"))):
            b = parse_basis(entry["basis"], algebra)
        images[b] = decode_element(doc, algebra, entry.get("image", {"terms": []}))
    with located(doc, "images"):
        return DerivationTable(algebra, images, parity, degree)


def decode_derivation(doc: JsonDocument, algebra: SuperAlgebra, window: Window) -> DerivationTable:
    """
    导子文件：
        {"kind": "table", "parity": "even", "degree": "1", "images": [{"basis": ..., "image": {...}}]}
        {"kind": "hom", "phi": {"1/2": "3"}}
        {"kind": "inner", "z": {"terms": [...]}}

    table 中没有列出的窗口基向量映到 0；hom / inner 在窗口的括号包上建表。
    """
    data = _mapping(doc, doc.data, "导子文件")
    kind = str(data.get("kind", "table"))
    if kind == "table":
        return _decode_table(doc, algebra, data, window)
    domain = algebra.window_basis(window.hull())
    if kind == "hom":
        with located(doc, "phi"):
            values = parse_basis_values(data.get("phi", {}), algebra.group, algebra.field.zero)
            return phi_table(algebra, HomZ(algebra.field, values), domain)
    if kind == "inner":
        z = decode_element(doc, algebra, data.get("z"))
        with located(doc, "z"):
            return inner_table(algebra, z, domain)
    raise doc.error(f"未知的导子类型 {kind!r}，可选 table / hom / inner", kind)


def decode_aut_params(doc: JsonDocument, algebra: SuperAlgebra, data: Any = None) -> AutParams:
    """
    自同构文件：{"tau": {"1/2": "2"}, "c": "3 + 2*sqrt(2)", "r": "1 + 1*sqrt(2)", "sign": -1}

    τ 缺省的键取 1；W 变体可省略 r 与 sign。
    """
    data = _mapping(doc, doc.data if data is None else data, "自同构参数")
    field = algebra.field
    with located(doc, "tau"):
        tau_values = parse_basis_values(data.get("tau", {}), algebra.group, field.one)
    if "c" not in data:
        raise doc.error("自同构参数缺少 c", "tau")
    with located(doc, str(data["c"])):
        c = parse_scalar(str(data["c"]), field)
    r = None
    if data.get("r") is not None:
        with located(doc, str(data["r"])):
            r = parse_scalar(str(data["r"]), field)
    elif not algebra.variant.has_odd:
        r = field.one
    sign = data.get("sign", 1)
    if not isinstance(sign, int) or isinstance(sign, bool):
        raise doc.error(f"sign 应为整数，收到 {sign!r}", "sign")
    return AutParams(Character(field, tau_values), c, r, sign)


def decode_aut_pair(doc: JsonDocument, algebra: SuperAlgebra) -> Tuple[AutParams, AutParams]:
    """aut-compose 的输入：{"p1": {...}, "p2": {...}}"""
    data = _mapping(doc, doc.data, "aut-compose 输入")
    for key in ("p1", "p2"):
        if key not in data:
            raise doc.error(f"缺少 {key}", key)
    return decode_aut_params(doc, algebra, data["p1"]), decode_aut_params(doc, algebra, data["p2"])


def decode_cocycle(doc: JsonDocument, algebra: SuperAlgebra, window: Window) -> CocycleSpec:
    """
    上闭链文件：
        {"kind": "coboundary", "g": {"L(0,0)": "1"}}
        {"kind": "table", "window": {...}, "entries": [{"x": "L(2,0)", "y": "L(-2,0)", "value": "1/2"}]}
        {"kind": "svir-central", "window": {...}}

    表形式缺省使用会话窗口；svir-central 要求会话变体 SVir0。
    """
    data = _mapping(doc, doc.data, "上闭链文件")
    kind = str(data.get("kind", ""))
    if kind == "coboundary":
        g_data = _mapping(doc, data.get("g", {}), "g")
        values: Dict[BasisVector, Any] = {}
        for key, value in g_data.items():
            with located(doc, str(key)):
                b = parse_basis(key, algebra)
            with located(doc, str(value)):
                values[b] = parse_scalar(str(value), algebra.field)
        return Coboundary(algebra, LinearFunctional(algebra.field, values))
    table_window = window
    if data.get("window") is not None:
        table_window = decode_window(doc, algebra, data["window"])
    if kind == "table":
        entries = []
        raw = data.get("entries", [])
        if not isinstance(raw, list):
            raise doc.error("entries 应为列表", "entries")
        for entry in raw:
            entry = _mapping(doc, entry, "entries 的条目")
            for key in ("x", "y", "value"):
                if key not in entry:
                    raise doc.error(f"条目缺少 {key}", "entries")
            with located(doc, str(entry["x"])):
                x = parse_basis(entry["x"], algebra)
            with located(doc, str(entry["y"])):
                y = parse_basis(entry["y"], algebra)
            with located(doc, str(entry["value"])):
                value = parse_scalar(str(entry["value"]), algebra.field)
            entries.append((x, y, value))
        with located(doc, "entries"):
            return TableCocycle(algebra, table_window, entries)
    if kind == "svir-central":
        with located(doc, kind):
            return svir_central_cocycle(algebra, table_window)
    raise doc.error(f"未知的上闭链类型 {kind!r}，可选 coboundary / table / svir-central", kind or "kind")


def is_element_document(doc: JsonDocument) -> bool:
    return isinstance(doc.data, Mapping) and "terms" in doc.data and "kind" not in doc.data
