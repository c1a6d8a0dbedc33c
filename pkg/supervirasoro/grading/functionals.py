"""
Ω 上的群同态 Hom_Z(Ω, F) 与特征 χ(Ω)
两者都由规范基上的取值确定
"""
from typing import Sequence, Tuple

from supervirasoro.field.quadratic import QuadExtScalar, QuadraticField
from supervirasoro.grading.index_group import GroupElement, IndexGroup


class HomZ:
    """加法同态 φ: Ω → F，按 Z-线性从规范基延拓"""

    def __init__(self, field: QuadraticField, values: Sequence[QuadExtScalar]):
        self.field = field
        self.values: Tuple[QuadExtScalar, ...] = tuple(field.coerce(v) for v in values)

    @classmethod
    def identity(cls, group: IndexGroup) -> "HomZ":
        """φ₀: α ↦ α"""
        return cls(group.field, group.canonical_basis)

    @classmethod
    def zero(cls, group: IndexGroup) -> "HomZ":
        return cls(group.field, [group.field.zero] * group.rank)

    def evaluate(self, g: GroupElement) -> QuadExtScalar:
        total = self.field.zero
        for c, v in zip(g.coords, self.values):
            if c:
                total = total + v * c
        return total

    def __call__(self, g: GroupElement) -> QuadExtScalar:
        return self.evaluate(g)

    def __eq__(self, other) -> bool:
        return isinstance(other, HomZ) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"HomZ({', '.join(str(v) for v in self.values)})"


class Character:
    """
    乘法同态 τ: Ω → F*

    取值为零的特征可以构造出来，由 aut_validate 报告；对其负坐标求值会抛 ZeroDivisionError。
    """

    def __init__(self, field: QuadraticField, values: Sequence[QuadExtScalar]):
        self.field = field
        self.values: Tuple[QuadExtScalar, ...] = tuple(field.coerce(v) for v in values)

    @classmethod
    def trivial(cls, group: IndexGroup) -> "Character":
        return cls(group.field, [group.field.one] * group.rank)

    def is_invertible(self) -> bool:
        return all(bool(v) for v in self.values)

    def evaluate(self, g: GroupElement) -> QuadExtScalar:
        result = self.field.one
        for c, v in zip(g.coords, self.values):
            if c:
                result = result * (v ** c)
        return result

    def __call__(self, g: GroupElement) -> QuadExtScalar:
        return self.evaluate(g)

    def inverse(self) -> "Character":
        return Character(self.field, [v.inverse() for v in self.values])

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.field, [x * y for x, y in zip(self.values, other.values)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Character({', '.join(str(v) for v in self.values)})"
