"""
自同构参数 (τ, c, r, ∇)
"""
from dataclasses import dataclass
from typing import Optional

from supervirasoro.field.quadratic import QuadExtScalar, QuadraticField
from supervirasoro.grading.functionals import Character
from supervirasoro.grading.index_group import IndexGroup


class AutomorphismError(ValueError):
    """自同构参数无法应用或复合（像指标越出格）"""


@dataclass(frozen=True)
class AutParams:
    """
    φ_{τ,c,∇}: L_{α,i} ↦ τ(α)·c^{i−1}·L_{cα,i}
               G_{α,i} ↦ ∇·τ(α)·c^{i}·r⁻¹·G_{cα,i}

    r 是给定的 c 的平方根；W 变体只用 L 的公式，r 可以缺省。
    构造时不做检查，合法性由 aut_validate 报告。
    """

    tau: Character
    c: QuadExtScalar
    r: Optional[QuadExtScalar] = None
    sign: int = 1

    @classmethod
    def identity(cls, group: IndexGroup) -> "AutParams":
        one = group.field.one
        return cls(Character.trivial(group), one, one, 1)

    @classmethod
    def parity_involution(cls, group: IndexGroup) -> "AutParams":
        """L 不变，G ↦ −G"""
        one = group.field.one
        return cls(Character.trivial(group), one, one, -1)

    @property
    def field(self) -> QuadraticField:
        return self.tau.field

    def describe(self) -> dict:
        return {
            "tau": [str(v) for v in self.tau.values],
            "c": str(self.c),
            "r": None if self.r is None else str(self.r),
            "sign": self.sign,
        }
