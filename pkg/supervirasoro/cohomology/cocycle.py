"""
2-上闭链：上边缘 ψ_g(x,y) = g([x,y]) 与有限表
"""
from abc import ABC, abstractmethod
from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from supervirasoro.algebra.basis import BasisVector, Kind, Variant, VariantError
from supervirasoro.algebra.checks import CheckResult, Violation, window_pairs
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.superalgebra import SuperAlgebra, super_sign
from supervirasoro.algebra.window import Window
from supervirasoro.field.quadratic import QuadExtScalar, QuadraticField
from supervirasoro.utils.logger import get_logger
from supervirasoro.utils.parallel import run_partitioned


logger = get_logger("cohomology")


class CocycleSpecError(ValueError):
    """上闭链表自相矛盾"""


class OutOfWindowError(ValueError):
    """在表的窗口之外求值"""


class UndefinedFunctionalError(ValueError):
    """在线性泛函的定义域之外求值"""


class LinearFunctional:
    """
    基向量上的线性泛函

    domain 为 None 时在映射之外取零；给定 domain 时只在 domain 上有定义，
    超出时抛 UndefinedFunctionalError。
    """

    def __init__(
        self,
        field: QuadraticField,
        values: Dict[BasisVector, QuadExtScalar],
        domain: Optional[Iterable[BasisVector]] = None,
    ):
        self.field = field
        self.values: Dict[BasisVector, QuadExtScalar] = {
            b: field.coerce(v) for b, v in values.items() if v
        }
        self.domain: Optional[FrozenSet[BasisVector]] = None if domain is None else frozenset(domain)

    def value(self, b: BasisVector) -> QuadExtScalar:
        if self.domain is not None and b not in self.domain:
            raise UndefinedFunctionalError(f"泛函在 {b!r} 上没有定义")
        return self.values.get(b, self.field.zero)

    def evaluate(self, x: Element) -> QuadExtScalar:
        total = self.field.zero
        for b, c in x.terms:
            v = self.value(b)
            if v:
                total = total + v * c
        return total

    def __call__(self, x: Element) -> QuadExtScalar:
        return self.evaluate(x)

    def defined_on(self, x: Element) -> bool:
        return self.domain is None or all(b in self.domain for b, _ in x.terms)

    def with_value(self, b: BasisVector, value: QuadExtScalar) -> "LinearFunctional":
        values = dict(self.values)
        values[b] = value
        return LinearFunctional(self.field, values, self.domain)

    def agrees_with(self, other: "LinearFunctional", vectors: Iterable[BasisVector]) -> List[BasisVector]:
        """返回两个泛函取值不同的向量"""
        return [b for b in vectors if self.value(b) != other.value(b)]

    def __repr__(self) -> str:
        return f"LinearFunctional({len(self.values)} 个非零值)"


class CocycleSpec(ABC):
    """双线性反对称型 ψ"""

    def __init__(self, algebra: SuperAlgebra):
        self.algebra = algebra

    @abstractmethod
    def evaluate_basis(self, x: BasisVector, y: BasisVector) -> QuadExtScalar:
        ...

    @abstractmethod
    def can_evaluate(self, x: Element) -> bool:
        """x 的支撑是否都在可求值的范围内"""

    def evaluate(self, x: Element, y: Element) -> QuadExtScalar:
        """双线性求值"""
        total = self.algebra.field.zero
        for bx, cx in x.terms:
            for by, cy in y.terms:
                v = self.evaluate_basis(bx, by)
                if v:
                    total = total + v * cx * cy
        return total

    def __call__(self, x: Element, y: Element) -> QuadExtScalar:
        return self.evaluate(x, y)


class Coboundary(CocycleSpec):
    """ψ_g(x, y) = g([x, y])"""

    def __init__(self, algebra: SuperAlgebra, g: LinearFunctional):
        super().__init__(algebra)
        self.g = g

    def evaluate_basis(self, x: BasisVector, y: BasisVector) -> QuadExtScalar:
        return self.g.evaluate(self.algebra.bracket_basis(x, y))

    def can_evaluate(self, x: Element) -> bool:
        return True


class TableCocycle(CocycleSpec):
    """
    有限表给出的 ψ

    每个无序对只存一个方向；另一方向由 ψ(x,y) = −(−1)^{|x||y|}ψ(y,x) 给出。
    窗口内没有条目的对取 0，窗口外抛 OutOfWindowError。
    """

    def __init__(
        self,
        algebra: SuperAlgebra,
        window: Window,
        entries: Iterable[Tuple[BasisVector, BasisVector, QuadExtScalar]] = (),
    ):
        super().__init__(algebra)
        self.window = window
        self.basis: FrozenSet[BasisVector] = frozenset(algebra.window_basis(window))
        self.entries: Dict[Tuple[BasisVector, BasisVector], QuadExtScalar] = {}
        for x, y, value in entries:
            self._store(x, y, algebra.field.coerce(value))

    def _orient(self, x: BasisVector, y: BasisVector, value: QuadExtScalar):
        if x.sort_key() <= y.sort_key():
            return (x, y), value
        return (y, x), -value * super_sign(x, y)

    def _store(self, x: BasisVector, y: BasisVector, value: QuadExtScalar) -> None:
        for b in (x, y):
            self.algebra.validate(b)
            if b not in self.basis:
                raise OutOfWindowError(f"表条目 {self.algebra.format_vector(b)} 不在表的窗口内")
        if x == y and super_sign(x, x) == 1 and value:
            raise CocycleSpecError(
                f"偶向量 {self.algebra.format_vector(x)} 上 ψ(x,x) 必须为 0"
            )
        key, oriented = self._orient(x, y, value)
        existing = self.entries.get(key)
        if existing is not None and existing != oriented:
            raise CocycleSpecError(
                f"条目 ({self.algebra.format_vector(x)}, {self.algebra.format_vector(y)}) 与已有条目矛盾"
            )
        if oriented:
            self.entries[key] = oriented

    def evaluate_basis(self, x: BasisVector, y: BasisVector) -> QuadExtScalar:
        for b in (x, y):
            if b not in self.basis:
                raise OutOfWindowError(
                    f"ψ({self.algebra.format_vector(x)}, {self.algebra.format_vector(y)}) 超出表窗口"
                )
        if x.sort_key() <= y.sort_key():
            return self.entries.get((x, y), self.algebra.field.zero)
        value = self.entries.get((y, x))
        if value is None:
            return self.algebra.field.zero
        return -value * super_sign(x, y)

    def can_evaluate(self, x: Element) -> bool:
        return all(b in self.basis for b, _ in x.terms)


def cocycle_eval(psi: CocycleSpec, x: Element, y: Element) -> QuadExtScalar:
    return psi.evaluate(x, y)


def svir_central_cocycle(algebra: SuperAlgebra, window: Window) -> TableCocycle:
    """
    SVir0 上的中心上闭链

    ψ(L_α, L_β) = δ_{α+β,0}·(α³−α)/12，ψ(L, G) = 0，ψ(G_μ, G_ν) = −δ_{μ+ν,0}·(μ²−1/4)/3
    """
    if algebra.variant is not Variant.SVIR0:
        raise VariantError(f"svir_central_cocycle 要求变体 SVir0，当前 {algebra.variant.value}")
    entries = []
    basis = algebra.window_basis(window)
    for x, y in product(basis, repeat=2):
        if x.kind != y.kind or x.sort_key() > y.sort_key():
            continue
        if not (x.degree + y.degree).is_zero():
            continue
        a = algebra.group.evaluate(x.degree)
        if x.kind is Kind.L:
            value = (a ** 3 - a) * Fraction(1, 12)
        else:
            value = -(a * a - Fraction(1, 4)) * Fraction(1, 3)
        entries.append((x, y, value))
    return TableCocycle(algebra, window, entries)


# ----------------------------------------------------------------------
# 上闭链检查
# ----------------------------------------------------------------------

def _skew_form_worker(psi: CocycleSpec, pairs) -> CheckResult:
    result = CheckResult()
    for x, y in pairs:
        result.checked += 1
        residual = psi.evaluate_basis(x, y) + psi.evaluate_basis(y, x) * super_sign(x, y)
        if residual:
            result.violations.append(Violation("cocycle-skew", (x, y), residual))
    return result


def _cocycle_worker(psi: CocycleSpec, triples) -> CheckResult:
    algebra = psi.algebra
    result = CheckResult()
    for x, y, z in triples:
        yz = algebra.bracket_basis(y, z)
        xy = algebra.bracket_basis(x, y)
        xz = algebra.bracket_basis(x, z)
        if not (psi.can_evaluate(yz) and psi.can_evaluate(xy) and psi.can_evaluate(xz)):
            result.skipped += 1
            continue
        result.checked += 1
        vx, vy, vz = algebra.vector(x), algebra.vector(y), algebra.vector(z)
        residual = (
            psi.evaluate(vx, yz)
            - psi.evaluate(xy, vz)
            - psi.evaluate(vy, xz) * super_sign(x, y)
        )
        if residual:
            result.violations.append(Violation("cocycle", (x, y, z), residual))
    return result


def is_cocycle(
    psi: CocycleSpec,
    window: Window,
    triples: Optional[List[Tuple[BasisVector, ...]]] = None,
    jobs: int = 1,
) -> CheckResult:
    """
    超反对称性 + ψ(x,[y,z]) = ψ([x,y],z) + (−1)^{|x||y|}ψ(y,[x,z])

    括号支撑出了可求值范围的三元组计为 skipped。
    """
    basis = psi.algebra.window_basis(window)
    skew = CheckResult.combine(run_partitioned(_skew_form_worker, psi, window_pairs(basis), jobs))
    if triples is None:
        triples = list(product(basis, repeat=3))
    identity = CheckResult.combine(run_partitioned(_cocycle_worker, psi, triples, jobs))
    result = skew.merge(identity)
    logger.info(
        "上闭链检查: 检查 %d 项, 跳过 %d 项, 违例 %d 个",
        result.checked, result.skipped, len(result.violations),
    )
    return result
