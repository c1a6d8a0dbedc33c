"""
标量域模块
"""

from supervirasoro.field.quadratic import (
    FieldError,
    FieldMismatchError,
    QuadExtScalar,
    QuadraticField,
    is_square_free,
)
from supervirasoro.field.literals import LiteralParseError, parse_scalar, format_scalar

__all__ = [
    "FieldError",
    "FieldMismatchError",
    "QuadExtScalar",
    "QuadraticField",
    "is_square_free",
    "LiteralParseError",
    "parse_scalar",
    "format_scalar",
]
