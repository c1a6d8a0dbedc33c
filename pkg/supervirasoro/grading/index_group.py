"""
指标群 Γ ⊆ Ω = ⟨Γ ∪ {s}⟩
Ω 的元素以规范 Z-基下的整数坐标存储
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from supervirasoro.field.quadratic import QuadExtScalar, QuadraticField
from supervirasoro.grading.lattice import Lattice
from supervirasoro.utils.logger import get_logger


class GroupValidationError(ValueError):
    """指标群构造或缩放参数不合法"""


class Coset(str, Enum):
    OMEGA = "omega"
    GAMMA = "gamma"
    S_PLUS_GAMMA = "s_plus_gamma"


@dataclass(frozen=True, order=True)
class GroupElement:
    """Ω 的元素，coords 为规范基下的整数坐标"""

    coords: Tuple[int, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-x for x in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    @classmethod
    def zero(cls, rank: int) -> "GroupElement":
        return cls((0,) * rank)


@dataclass(frozen=True)
class ScalingCheck:
    """scaling_preserves 的结果；失败时 witness 是落在格外的那个值"""

    preserved: bool
    witness: Optional[QuadExtScalar] = None
    reason: Optional[str] = None


class IndexGroup:
    """
    有限生成指标群

    用法:
        F = QuadraticField(2)
        group = IndexGroup.canonical(F, [F(1), F(0, 1)], F(1, 0) / 2)
        g = group.member(F(Fraction(3, 2), 1), Coset.OMEGA)
    """

    def __init__(
        self,
        field: QuadraticField,
        omega: Lattice,
        gamma: Lattice,
        s: QuadExtScalar,
        generators: Sequence[QuadExtScalar],
    ):
        self.field = field
        self.omega = omega
        self.gamma = gamma
        self.s = s
        self.generators = list(generators)
        self.canonical_basis: List[QuadExtScalar] = [field.from_coords(b) for b in omega.basis]
        # Γ 的规范基在 Ω 坐标下的表示
        self.gamma_sublattice: List[Tuple[int, ...]] = [
            omega.coordinates(b) for b in gamma.basis
        ]
        self.s_element = GroupElement(omega.coordinates(s.coords))
        self._value_cache: Dict[GroupElement, QuadExtScalar] = {}
        self._gamma_cache: Dict[GroupElement, bool] = {}

    @classmethod
    def canonical(
        cls,
        field: QuadraticField,
        generators: Sequence[QuadExtScalar],
        s: QuadExtScalar,
    ) -> "IndexGroup":
        """
        由 Γ 的生成元和平移 s 构造 Ω 的规范基

        Raises:
            GroupValidationError: 生成元为空、1 ∉ Γ 或 2s ∉ Γ
        """
        logger = get_logger("grading")
        if not generators:
            raise GroupValidationError("Γ 的生成元不能为空")
        generators = [field.coerce(g) for g in generators]
        s = field.coerce(s)
        gamma = Lattice.from_generators([g.coords for g in generators])
        omega = Lattice.from_generators([g.coords for g in generators] + [s.coords])
        if not gamma.contains(field.one.coords):
            raise GroupValidationError("1 不属于 Γ（要求 Z ⊆ Γ）")
        if not gamma.contains((s * 2).coords):
            raise GroupValidationError(f"2s = {s * 2} 不属于 Γ")
        group = cls(field, omega, gamma, s, generators)
        logger.debug(
            "指标群: Ω 基 %s, Γ 基 %s, s = %s",
            [str(b) for b in group.canonical_basis],
            [str(field.from_coords(b)) for b in gamma.basis],
            s,
        )
        return group

    @property
    def rank(self) -> int:
        return self.omega.rank

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_value_cache"] = {}
        state["_gamma_cache"] = {}
        return state

    def zero(self) -> GroupElement:
        return GroupElement.zero(self.rank)

    def element(self, coords: Sequence[int]) -> GroupElement:
        if len(coords) != self.rank:
            raise GroupValidationError(f"坐标长度 {len(coords)} 与 Ω 的秩 {self.rank} 不一致")
        return GroupElement(tuple(int(c) for c in coords))

    def evaluate(self, g: GroupElement) -> QuadExtScalar:
        """GroupElement 在 F 中的取值"""
        value = self._value_cache.get(g)
        if value is None:
            value = self.field.from_coords(self.omega.vector(g.coords))
            self._value_cache[g] = value
        return value

    def member(self, x: QuadExtScalar, coset: Coset = Coset.OMEGA) -> Optional[GroupElement]:
        """
        成员判定

        Args:
            x: 域中的值
            coset: omega / gamma / s_plus_gamma

        Returns:
            x 在 Ω 中的坐标；不属于所要求的格或陪集时返回 None
        """
        x = self.field.coerce(x)
        coords = self.omega.coordinates(x.coords)
        if coords is None:
            return None
        g = GroupElement(coords)
        coset = Coset(coset)
        if coset is Coset.GAMMA and not self.in_gamma(g):
            return None
        if coset is Coset.S_PLUS_GAMMA and not self.in_s_plus_gamma(g):
            return None
        return g

    def in_gamma(self, g: GroupElement) -> bool:
        cached = self._gamma_cache.get(g)
        if cached is None:
            cached = self.gamma.contains(self.evaluate(g).coords)
            self._gamma_cache[g] = cached
        return cached

    def in_s_plus_gamma(self, g: GroupElement) -> bool:
        return self.in_gamma(g - self.s_element)

    def scale(self, g: GroupElement, c: QuadExtScalar) -> Optional[GroupElement]:
        """c·g，不在 Ω 中时返回 None"""
        return self.member(self.evaluate(g) * c, Coset.OMEGA)

    def scaling_preserves(self, c: QuadExtScalar) -> ScalingCheck:
        """
        检查 cΩ = Ω、cΓ = Γ 以及 c(s+Γ) = s+Γ

        Raises:
            GroupValidationError: c = 0
        """
        c = self.field.coerce(c)
        if not c:
            raise GroupValidationError("缩放因子 c 不能为 0")
        c_inv = c.inverse()
        for factor in (c, c_inv):
            for b in self.canonical_basis:
                image = factor * b
                if not self.omega.contains(image.coords):
                    return ScalingCheck(False, image, "scaling does not preserve lattice Ω")
        for factor in (c, c_inv):
            for b in self.gamma.basis:
                image = factor * self.field.from_coords(b)
                if not self.gamma.contains(image.coords):
                    return ScalingCheck(False, image, "scaling does not preserve lattice Γ")
        for factor in (c, c_inv):
            image = factor * self.s
            if not self.gamma.contains((image - self.s).coords):
                return ScalingCheck(False, image, "scaling does not preserve coset s+Γ")
        return ScalingCheck(True)

    def format(self, g: GroupElement) -> str:
        return str(self.evaluate(g))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexGroup):
            return NotImplemented
        return (
            self.field == other.field
            and self.omega == other.omega
            and self.gamma == other.gamma
            and self.s == other.s
        )

    def __hash__(self) -> int:
        return hash((self.field, self.omega, self.gamma, self.s))

    def __repr__(self) -> str:
        basis = ", ".join(str(b) for b in self.canonical_basis)
        return f"IndexGroup(Ω=⟨{basis}⟩, s={self.s}, d={self.field.d})"
