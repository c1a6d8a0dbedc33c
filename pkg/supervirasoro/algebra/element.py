"""
稀疏元素：基向量 → 系数 的有限映射
"""
from typing import Callable, Dict, Iterable, Iterator, Optional, Tuple

from supervirasoro.algebra.basis import BasisVector, Parity, Variant, VariantError
from supervirasoro.field.quadratic import QuadExtScalar
from supervirasoro.grading.index_group import GroupElement


class Element:
    """
    代数元素

    只存非零系数，项按基向量排序，因此相等性就是结构相等。
    """

    __slots__ = ("variant", "_terms", "_sorted")

    def __init__(self, variant: Variant, terms: Optional[Dict[BasisVector, QuadExtScalar]] = None):
        self.variant = variant
        self._terms: Dict[BasisVector, QuadExtScalar] = {
            b: c for b, c in (terms or {}).items() if c
        }
        self._sorted: Optional[Tuple[Tuple[BasisVector, QuadExtScalar], ...]] = None

    @classmethod
    def zero(cls, variant: Variant) -> "Element":
        return cls(variant)

    @classmethod
    def from_pairs(cls, variant: Variant, pairs: Iterable[Tuple[BasisVector, QuadExtScalar]]) -> "Element":
        """合并同类项"""
        terms: Dict[BasisVector, QuadExtScalar] = {}
        for b, c in pairs:
            if not c:
                continue
            if b in terms:
                terms[b] = terms[b] + c
            else:
                terms[b] = c
        return cls(variant, terms)

    @classmethod
    def basis(cls, variant: Variant, b: BasisVector, coeff: QuadExtScalar) -> "Element":
        return cls(variant, {b: coeff})

    @property
    def terms(self) -> Tuple[Tuple[BasisVector, QuadExtScalar], ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._terms.items(), key=lambda t: t[0].sort_key()))
        return self._sorted

    def support(self) -> Tuple[BasisVector, ...]:
        return tuple(b for b, _ in self.terms)

    def coefficient(self, b: BasisVector) -> Optional[QuadExtScalar]:
        return self._terms.get(b)

    def as_dict(self) -> Dict[BasisVector, QuadExtScalar]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[BasisVector, QuadExtScalar]]:
        return iter(self.terms)

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"不能与 {type(other).__name__} 运算")
        if other.variant is not self.variant:
            raise VariantError(f"变体不一致: {self.variant.value} 与 {other.variant.value}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        terms = dict(self._terms)
        for b, c in other._terms.items():
            terms[b] = terms[b] + c if b in terms else c
        return Element(self.variant, terms)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        terms = dict(self._terms)
        for b, c in other._terms.items():
            terms[b] = terms[b] - c if b in terms else -c
        return Element(self.variant, terms)

    def __neg__(self) -> "Element":
        return Element(self.variant, {b: -c for b, c in self._terms.items()})

    def scale(self, factor) -> "Element":
        if not factor:
            return Element(self.variant)
        return Element(self.variant, {b: c * factor for b, c in self._terms.items()})

    def __mul__(self, factor) -> "Element":
        if isinstance(factor, Element):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def project(self, predicate: Callable[[BasisVector], bool]) -> "Element":
        return Element(self.variant, {b: c for b, c in self._terms.items() if predicate(b)})

    def component(self, degree: GroupElement) -> "Element":
        """次数为 degree 的齐次分量；C 属于次数 0"""
        zero = degree.is_zero()
        return self.project(lambda b: (b.is_central and zero) or (not b.is_central and b.degree == degree))

    def parities(self) -> set:
        return {b.parity for b in self._terms}

    def parity(self) -> Optional[Parity]:
        """奇偶齐次时返回奇偶性；零元素或非齐次时返回 None"""
        ps = self.parities()
        return ps.pop() if len(ps) == 1 else None

    def is_parity_homogeneous(self) -> bool:
        return len(self.parities()) <= 1

    def degrees(self, zero: GroupElement) -> set:
        return {zero if b.is_central else b.degree for b in self._terms}

    def degree(self, zero: GroupElement) -> Optional[GroupElement]:
        ds = self.degrees(zero)
        return ds.pop() if len(ds) == 1 else None

    def is_degree_homogeneous(self, zero: GroupElement) -> bool:
        return len(self.degrees(zero)) <= 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.variant is other.variant and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.variant, self.terms))

    def __getstate__(self):
        return {"variant": self.variant, "terms": self._terms}

    def __setstate__(self, state):
        self.variant = state["variant"]
        self._terms = state["terms"]
        self._sorted = None

    def __repr__(self) -> str:
        if not self._terms:
            return f"Element[{self.variant.value}](0)"
        body = " + ".join(f"({c})*{b!r}" for b, c in self.terms)
        return f"Element[{self.variant.value}]({body})"
