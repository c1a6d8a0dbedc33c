"""
有限导子表：窗口基向量 → 像
"""
from typing import Dict, Iterable, Optional

from supervirasoro.algebra.basis import BasisVector, Parity
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.grading.index_group import GroupElement


class DerivationTableError(ValueError):
    """导子表不一致或在定义域外求值"""


class DerivationTable:
    """
    导子在有限定义域上的取值表

    构造时检查：声明了次数 γ 时，次数 α 的向量的像是 α+γ 次齐次的；
    像的奇偶性等于向量奇偶性加上声明的奇偶性。
    """

    def __init__(
        self,
        algebra: SuperAlgebra,
        images: Dict[BasisVector, Element],
        parity: Parity = Parity.EVEN,
        degree: Optional[GroupElement] = None,
    ):
        self.algebra = algebra
        self.parity = Parity(parity)
        self.degree = degree
        self.images: Dict[BasisVector, Element] = {}
        zero = algebra.group.zero()
        for b, image in images.items():
            algebra.validate(b)
            algebra.check_element(image)
            if image:
                expected = Parity((int(b.parity) + int(self.parity)) % 2)
                if image.parities() != {expected}:
                    raise DerivationTableError(
                        f"{algebra.format_vector(b)} 的像奇偶性不对，应为 {expected.name.lower()}"
                    )
                if degree is not None:
                    source = zero if b.is_central else b.degree
                    if image.degrees(zero) != {source + degree}:
                        raise DerivationTableError(
                            f"{algebra.format_vector(b)} 的像不是 {algebra.group.format(source + degree)} 次齐次的"
                        )
            self.images[b] = image

    @property
    def domain(self) -> frozenset:
        return frozenset(self.images)

    def covers(self, x: Element) -> bool:
        return all(b in self.images for b, _ in x.terms)

    def apply_vector(self, b: BasisVector) -> Element:
        try:
            return self.images[b]
        except KeyError:
            raise DerivationTableError(f"{self.algebra.format_vector(b)} 不在导子表的定义域内") from None

    def apply(self, x: Element) -> Element:
        """线性延拓"""
        total = self.algebra.zero()
        for b, c in x.terms:
            image = self.apply_vector(b)
            if image:
                total = total + image.scale(c)
        return total

    def __call__(self, x: Element) -> Element:
        return self.apply(x)

    def nonzero(self) -> Dict[BasisVector, Element]:
        return {b: v for b, v in self.images.items() if v}

    def restrict(self, domain: Iterable[BasisVector]) -> "DerivationTable":
        return DerivationTable(
            self.algebra,
            {b: self.images[b] for b in domain if b in self.images},
            self.parity,
            self.degree,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, DerivationTable):
            return NotImplemented
        if self.domain != other.domain:
            return False
        return all(self.images[b] == other.images[b] for b in self.images)

    def __repr__(self) -> str:
        return (
            f"DerivationTable({len(self.images)} 个向量, 非零 {len(self.nonzero())}, "
            f"parity={self.parity.name.lower()})"
        )
