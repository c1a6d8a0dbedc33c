"""
标量字面量解析
格式: "p/q"、"p/q + r/s*sqrt(d)"、"sqrt(d)"，空白不敏感
"""
import re
from fractions import Fraction

from supervirasoro.field.quadratic import (
    FieldMismatchError,
    QuadExtScalar,
    QuadraticField,
)


class LiteralParseError(ValueError):
    """标量字面量无法解析"""

    def __init__(self, text: str, token: str, column: int):
        self.text = text
        self.token = token
        self.column = column
        super().__init__(f"无法解析标量字面量 {text!r}: 第 {column} 列附近的 {token!r}")


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:"
    r"(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?(?:\s*\*\s*sqrt\s*\(\s*(?P<rad>-?\d+)\s*\))?"
    r"|sqrt\s*\(\s*(?P<bare>-?\d+)\s*\)"
    r")\s*"
)


def _offending_token(text: str, pos: int) -> str:
    rest = text[pos:].strip()
    return rest.split()[0] if rest else "<end>"


def parse_scalar(text: str, field: QuadraticField) -> QuadExtScalar:
    """
    解析标量字面量

    Args:
        text: 字面量文本
        field: 会话的二次域

    Returns:
        域中的标量

    Raises:
        LiteralParseError: 语法错误
        FieldMismatchError: sqrt 中的被开方数与会话 d 不一致
    """
    if not isinstance(text, str):
        raise LiteralParseError(str(text), str(text), 1)
    if not text.strip():
        raise LiteralParseError(text, "<empty>", 1)

    a = Fraction(0)
    b = Fraction(0)
    pos = 0
    first = True
    while pos < len(text):
        if not text[pos:].strip():
            break
        match = _TERM.match(text, pos)
        if match is None or match.end() == pos:
            raise LiteralParseError(text, _offending_token(text, pos), pos + 1)
        if not first and match.group("sign") is None:
            raise LiteralParseError(text, _offending_token(text, pos), pos + 1)

        sign = -1 if match.group("sign") == "-" else 1
        radicand = match.group("rad") or match.group("bare")
        if match.group("bare") is not None:
            value = Fraction(1)
        else:
            den = int(match.group("den")) if match.group("den") else 1
            if den == 0:
                raise LiteralParseError(text, match.group(0).strip(), pos + 1)
            value = Fraction(int(match.group("num")), den)

        if radicand is None:
            a += sign * value
        else:
            if int(radicand) != field.d:
                raise FieldMismatchError(
                    f"字面量 {text!r} 使用 sqrt({radicand})，会话 d={field.d}"
                )
            b += sign * value
        pos = match.end()
        first = False

    return field(a, b)


def format_scalar(x: QuadExtScalar) -> str:
    """标量的字面量表示，parse_scalar 的逆"""
    return str(x)
