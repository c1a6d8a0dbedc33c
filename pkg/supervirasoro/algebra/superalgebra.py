"""
广义 super-Virasoro 代数的精确括号

    [L_{α,i}, L_{β,j}] = (β−α) L_{α+β,i+j} + (j−i) L_{α+β,i+j−1}
    [L_{α,i}, G_{μ,j}] = (μ−α/2) G_{α+μ,i+j} + (j−i/2) G_{α+μ,i+j−1}
    [G_{μ,i}, G_{ν,j}] = 2 L_{μ+ν,i+j}

层数为 −1 的项按零处理，在求值时直接丢弃。
SVir 在第 0 层上附加中心项:
    [L_α, L_β] 加 δ_{α+β,0}·(α³−α)/12·C
    [G_μ, G_ν] 加 −δ_{μ+ν,0}·(μ²−1/4)/3·C
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from supervirasoro.algebra.basis import (
    BasisError,
    BasisVector,
    Kind,
    Variant,
    VariantError,
)
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.window import Window
from supervirasoro.field.quadratic import QuadExtScalar
from supervirasoro.grading.index_group import Coset, GroupElement, IndexGroup


DegreeLike = Union[GroupElement, QuadExtScalar, int, Fraction]

_ONE_TWELFTH = Fraction(1, 12)
_ONE_THIRD = Fraction(1, 3)
_ONE_QUARTER = Fraction(1, 4)
_ONE_HALF = Fraction(1, 2)


def super_sign(x: BasisVector, y: BasisVector) -> int:
    """(−1)^{|x||y|}"""
    return -1 if int(x.parity) and int(y.parity) else 1


class SuperAlgebra:
    """
    一个会话中的代数：指标群 + 变体

    用法:
        algebra = SuperAlgebra(group, Variant.SV)
        x = algebra.L(1, 0)
        y = algebra.G(Fraction(1, 2), 1)
        algebra.bracket(x, y)
    """

    def __init__(self, group: IndexGroup, variant: Variant):
        self.group = group
        self.field = group.field
        self.variant = Variant(variant)
        self._cache: Dict[Tuple[BasisVector, BasisVector], Element] = {}

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_cache"] = {}
        return state

    def with_variant(self, variant: Variant) -> "SuperAlgebra":
        return SuperAlgebra(self.group, variant)

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    def _degree(self, degree: DegreeLike, coset: Coset) -> GroupElement:
        if isinstance(degree, GroupElement):
            g = degree
        else:
            g = self.group.member(self.field.coerce(degree), Coset.OMEGA)
            if g is None:
                raise BasisError(f"次数 {degree} 不属于 Ω")
        ok = self.group.in_gamma(g) if coset is Coset.GAMMA else self.group.in_s_plus_gamma(g)
        if not ok:
            where = "Γ" if coset is Coset.GAMMA else "s+Γ"
            raise BasisError(f"次数 {self.group.format(g)} 不属于 {where}")
        return g

    def L(self, degree: DegreeLike, level: int = 0) -> BasisVector:
        return self.validate(BasisVector.L(self._degree(degree, Coset.GAMMA), level))

    def G(self, degree: DegreeLike, level: int = 0) -> BasisVector:
        if not self.variant.has_odd:
            raise VariantError("变体 W 中没有 G 向量")
        return self.validate(BasisVector.G(self._degree(degree, Coset.S_PLUS_GAMMA), level))

    def C(self) -> BasisVector:
        return self.validate(BasisVector.central())

    def validate(self, b: BasisVector) -> BasisVector:
        """
        检查基向量在本代数中合法

        Raises:
            BasisError / VariantError
        """
        if b.kind is Kind.C:
            if not self.variant.has_center:
                raise VariantError(f"中心元 C 只存在于 SVir，当前变体 {self.variant.value}")
            return b
        if b.kind is Kind.G and not self.variant.has_odd:
            raise VariantError("变体 W 中没有 G 向量")
        if len(b.degree.coords) != self.group.rank:
            raise BasisError(f"次数坐标长度 {len(b.degree.coords)} 与 Ω 的秩 {self.group.rank} 不一致")
        if b.kind is Kind.L and not self.group.in_gamma(b.degree):
            raise BasisError(f"L 的次数 {self.group.format(b.degree)} 不属于 Γ")
        if b.kind is Kind.G and not self.group.in_s_plus_gamma(b.degree):
            raise BasisError(f"G 的次数 {self.group.format(b.degree)} 不属于 s+Γ")
        if self.variant.level_zero_only and b.level != 0:
            raise BasisError(f"变体 {self.variant.value} 只有第 0 层，收到层数 {b.level}")
        return b

    def vector(self, b: BasisVector, coeff=1) -> Element:
        return Element(self.variant, {self.validate(b): self.field.coerce(coeff)})

    def element(self, pairs: Iterable[Tuple[BasisVector, object]]) -> Element:
        return Element.from_pairs(
            self.variant, ((self.validate(b), self.field.coerce(c)) for b, c in pairs)
        )

    def zero(self) -> Element:
        return Element.zero(self.variant)

    def check_element(self, x: Element) -> Element:
        if x.variant is not self.variant:
            raise VariantError(f"元素属于 {x.variant.value}，代数为 {self.variant.value}")
        return x

    # ------------------------------------------------------------------
    # 括号
    # ------------------------------------------------------------------

    def bracket_basis(self, x: BasisVector, y: BasisVector) -> Element:
        key = (x, y)
        cached = self._cache.get(key)
        if cached is None:
            cached = Element.from_pairs(self.variant, self._bracket_terms(x, y))
            self._cache[key] = cached
        return cached

    def _bracket_terms(self, x: BasisVector, y: BasisVector) -> List[Tuple[BasisVector, QuadExtScalar]]:
        if x.kind is Kind.C or y.kind is Kind.C:
            return []
        if x.kind is Kind.G and y.kind is Kind.L:
            return [(b, -c) for b, c in self._bracket_terms(y, x)]

        evaluate = self.group.evaluate
        a = evaluate(x.degree)
        b = evaluate(y.degree)
        degree = x.degree + y.degree
        i, j = x.level, y.level
        terms: List[Tuple[BasisVector, QuadExtScalar]] = []

        if x.kind is Kind.L and y.kind is Kind.L:
            terms.append((BasisVector.L(degree, i + j), b - a))
            if i + j >= 1 and j != i:
                terms.append((BasisVector.L(degree, i + j - 1), self.field.coerce(j - i)))
            if self.variant.has_center and degree.is_zero():
                terms.append((BasisVector.central(), (a ** 3 - a) * _ONE_TWELFTH))
        elif x.kind is Kind.L and y.kind is Kind.G:
            terms.append((BasisVector.G(degree, i + j), b - a * _ONE_HALF))
            secondary = Fraction(j) - Fraction(i, 2)
            if i + j >= 1 and secondary:
                terms.append((BasisVector.G(degree, i + j - 1), self.field.coerce(secondary)))
        else:
            terms.append((BasisVector.L(degree, i + j), self.field.coerce(2)))
            if self.variant.has_center and degree.is_zero():
                terms.append((BasisVector.central(), -(a * a - _ONE_QUARTER) * _ONE_THIRD))
        return terms

    def bracket(self, x: Element, y: Element) -> Element:
        """
        双线性括号

        Raises:
            VariantError: 元素变体与代数不一致
        """
        self.check_element(x)
        self.check_element(y)
        acc: Dict[BasisVector, QuadExtScalar] = {}
        for bx, cx in x.terms:
            for by, cy in y.terms:
                factor = cx * cy
                for b, c in self.bracket_basis(bx, by).terms:
                    value = factor * c
                    acc[b] = acc[b] + value if b in acc else value
        return Element(self.variant, acc)

    def bracket_vectors(self, x: BasisVector, y: BasisVector) -> Element:
        return self.bracket_basis(x, y)

    def adjoint(self, z: Element, x: Element) -> Element:
        """ad_z(x) = [z, x]"""
        return self.bracket(z, x)

    # ------------------------------------------------------------------
    # 公理残差
    # ------------------------------------------------------------------

    def skew_residual(self, x: BasisVector, y: BasisVector) -> Element:
        """[x,y] + (−1)^{|x||y|}[y,x]，恒为零"""
        return self.bracket_basis(x, y) + self.bracket_basis(y, x).scale(super_sign(x, y))

    def jacobi_residual(self, x: BasisVector, y: BasisVector, z: BasisVector) -> Element:
        """[x,[y,z]] − [[x,y],z] − (−1)^{|x||y|}[y,[x,z]]，恒为零"""
        vx, vy, vz = self.vector(x), self.vector(y), self.vector(z)
        left = self.bracket(vx, self.bracket_basis(y, z))
        middle = self.bracket(self.bracket_basis(x, y), vz)
        right = self.bracket(vy, self.bracket_basis(x, z)).scale(super_sign(x, y))
        return left - middle - right

    # ------------------------------------------------------------------
    # 窗口
    # ------------------------------------------------------------------

    def levels(self, window: Window) -> range:
        return range(0, 1) if self.variant.level_zero_only else range(0, window.i_max + 1)

    def window_basis(self, window: Window) -> List[BasisVector]:
        """窗口内本变体的全部基向量，按规范顺序"""
        if window.rank != self.group.rank:
            raise BasisError(f"窗口坐标长度 {window.rank} 与 Ω 的秩 {self.group.rank} 不一致")
        basis: List[BasisVector] = []
        if self.variant.has_center:
            basis.append(BasisVector.central())
        for degree in window.sorted_degrees():
            if self.group.in_gamma(degree):
                basis.extend(BasisVector.L(degree, i) for i in self.levels(window))
            if self.variant.has_odd and self.group.in_s_plus_gamma(degree):
                basis.extend(BasisVector.G(degree, i) for i in self.levels(window))
        return sorted(basis, key=BasisVector.sort_key)

    def in_window(self, b: BasisVector, window: Window) -> bool:
        if b.kind is Kind.C:
            return self.variant.has_center
        return b.degree in window.degrees and b.level in self.levels(window)

    # ------------------------------------------------------------------
    # 显示
    # ------------------------------------------------------------------

    def format_vector(self, b: BasisVector) -> str:
        if b.kind is Kind.C:
            return "C"
        return f"{b.kind.value}({self.group.format(b.degree)}, {b.level})"

    def format_element(self, x: Element) -> str:
        if x.is_zero():
            return "0"
        return " + ".join(f"({c})*{self.format_vector(b)}" for b, c in x.terms)

    def degree_value(self, b: BasisVector) -> Optional[QuadExtScalar]:
        return None if b.kind is Kind.C else self.group.evaluate(b.degree)

    def __repr__(self) -> str:
        return f"SuperAlgebra({self.variant.value}, {self.group!r})"
