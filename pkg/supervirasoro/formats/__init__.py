"""
文件与字面量格式
"""

from supervirasoro.formats.literals import (
    basis_values_to_json,
    element_to_json,
    format_basis,
    parse_basis,
    parse_basis_values,
    parse_degree,
    parse_element,
    parse_window,
    window_to_json,
)
from supervirasoro.formats.files import (
    decode_aut_pair,
    decode_aut_params,
    decode_cocycle,
    decode_derivation,
    decode_element,
    decode_window,
    is_element_document,
    located,
)

__all__ = [
    "basis_values_to_json",
    "element_to_json",
    "format_basis",
    "parse_basis",
    "parse_basis_values",
    "parse_degree",
    "parse_element",
    "parse_window",
    "window_to_json",
    "decode_aut_pair",
    "decode_aut_params",
    "decode_cocycle",
    "decode_derivation",
    "decode_element",
    "decode_window",
    "is_element_document",
    "located",
]
