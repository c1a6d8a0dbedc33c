"""
二次域 F = Q(√d) 上的精确算术
所有系数（结构常数、特征值、缩放因子、泛函取值）都落在这里，不使用浮点数
"""
from fractions import Fraction
from typing import Tuple, Union

from sympy import factorint


RationalLike = Union[int, Fraction]


class FieldError(ValueError):
    """二次域配置错误（d 非法）"""


class FieldMismatchError(FieldError):
    """参与运算的两个标量属于不同的 d"""


def is_square_free(n: int) -> bool:
    """
    判断整数是否无平方因子

    Args:
        n: 待检查的整数（可以为负）

    Returns:
        无平方因子时返回 True
    """
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


class QuadExtScalar:
    """
    Q(√d) 中的元素 a + b·√d

    a、b 以 Fraction 存储（最简分数、分母为正），相等性按坐标比较。
    与 int / Fraction 混合运算时，后者按 b = 0 嵌入。
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, d: int = 2) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._d = d

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @property
    def coords(self) -> Tuple[Fraction, Fraction]:
        """在 Q-基 {1, √d} 下的坐标"""
        return (self._a, self._b)

    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b != 0:
            raise ValueError(f"{self} 不是有理数")
        return self._a

    def norm(self) -> Fraction:
        """域范数 a² − d·b²"""
        return self._a * self._a - self._d * self._b * self._b

    def conjugate(self) -> "QuadExtScalar":
        return QuadExtScalar(self._a, -self._b, self._d)

    def inverse(self) -> "QuadExtScalar":
        """
        乘法逆元，经由范数计算

        Raises:
            ZeroDivisionError: 零元素没有逆
        """
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("0 在二次域中不可逆")
        return QuadExtScalar(self._a / n, -self._b / n, self._d)

    def _coerce(self, other):
        if isinstance(other, QuadExtScalar):
            if other._d != self._d:
                raise FieldMismatchError(
                    f"标量属于不同的二次域: d={self._d} 与 d={other._d}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtScalar(other, 0, self._d)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadExtScalar(self._a + other._a, self._b + other._b, self._d)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "QuadExtScalar":
        return QuadExtScalar(-self._a, -self._b, self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadExtScalar(self._a - other._a, self._b - other._b, self._d)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # (√d)² = d
        new_a = self._a * other._a + self._d * self._b * other._b
        new_b = self._a * other._b + self._b * other._a
        return QuadExtScalar(new_a, new_b, self._d)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "QuadExtScalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExtScalar(1, 0, self._d)
        base = self
        n = exponent
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExtScalar):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __repr__(self) -> str:
        return f"QuadExtScalar({self._a}, {self._b}, d={self._d})"

    def __str__(self) -> str:
        """标量字面量格式：p/q 或 p/q + r/s*sqrt(d)"""
        if self._b == 0:
            return str(self._a)
        root = f"sqrt({self._d})"
        if self._a == 0:
            return f"{self._b}*{root}"
        if self._b < 0:
            return f"{self._a} - {-self._b}*{root}"
        return f"{self._a} + {self._b}*{root}"


class QuadraticField:
    """
    二次域 Q(√d)，一个会话只使用一个 d

    用法:
        F = QuadraticField(2)
        x = F(1, 1)        # 1 + √2
        F.coerce(Fraction(1, 2))
    """

    def __init__(self, d: int):
        """
        Args:
            d: 无平方因子的整数，且 d ≠ 0, 1

        Raises:
            FieldError: d 非法
        """
        if d in (0, 1) or not is_square_free(d):
            raise FieldError(f"d 必须是无平方因子的整数且不等于 0、1，收到 d={d}")
        self.d = d

    def __call__(self, a: RationalLike = 0, b: RationalLike = 0) -> QuadExtScalar:
        return QuadExtScalar(a, b, self.d)

    @property
    def zero(self) -> QuadExtScalar:
        return QuadExtScalar(0, 0, self.d)

    @property
    def one(self) -> QuadExtScalar:
        return QuadExtScalar(1, 0, self.d)

    @property
    def sqrt_d(self) -> QuadExtScalar:
        return QuadExtScalar(0, 1, self.d)

    def coerce(self, x: Union[RationalLike, QuadExtScalar]) -> QuadExtScalar:
        """
        把 int / Fraction / 本域标量转换为本域标量

        Raises:
            FieldMismatchError: x 属于另一个 d
        """
        if isinstance(x, QuadExtScalar):
            if x.d != self.d:
                raise FieldMismatchError(f"标量 {x} 的 d={x.d} 与会话 d={self.d} 不一致")
            return x
        return QuadExtScalar(x, 0, self.d)

    def from_coords(self, coords) -> QuadExtScalar:
        a, b = coords
        return QuadExtScalar(a, b, self.d)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadraticField) and other.d == self.d

    def __hash__(self) -> int:
        return hash(("QuadraticField", self.d))

    def __repr__(self) -> str:
        return f"QuadraticField(d={self.d})"
