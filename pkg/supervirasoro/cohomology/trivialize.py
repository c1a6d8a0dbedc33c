"""
平凡化泛函 f 与残差 φ(x,y) = ψ(x,y) − f([x,y])
"""
from dataclasses import dataclass, field
from typing import Dict, List

from supervirasoro.algebra.basis import BasisVector, Kind, Variant, VariantError
from supervirasoro.algebra.checks import CheckResult, Violation, window_pairs
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.cohomology.cocycle import CocycleSpec, LinearFunctional
from supervirasoro.field.quadratic import QuadExtScalar
from supervirasoro.utils.logger import get_logger


logger = get_logger("cohomology")

SECTORS = ("LL", "LG", "GG")


def trivialize(psi: CocycleSpec, window: Window) -> LinearFunctional:
    """
    按层数递增计算 f：

        f(L_{0,i}) = ψ(L_{0,0}, L_{0,i+1}) / (i+1)
        f(L_{α,i}) = (ψ(L_{0,0}, L_{α,i}) − i·f(L_{α,i−1})) / α
        f(G_{0,i}) = 2/(2i−1) · ψ(L_{0,1}, G_{0,i})
        f(G_{α,i}) = (ψ(L_{0,0}, G_{α,i}) − i·f(G_{α,i−1})) / α

    Returns:
        只在窗口基上有定义的泛函

    Raises:
        OutOfWindowError: 表形式的 ψ 缺少递推需要的对
    """
    algebra = psi.algebra
    if algebra.variant not in (Variant.SV, Variant.W):
        raise VariantError(f"平凡化只适用于 SV / W，当前变体 {algebra.variant.value}")
    group = algebra.group
    zero = group.zero()
    l00 = algebra.vector(BasisVector.L(zero, 0))
    l01 = algebra.vector(BasisVector.L(zero, 1))

    basis = algebra.window_basis(window)
    values: Dict[BasisVector, QuadExtScalar] = {}
    for b in sorted(basis, key=lambda v: v.level):
        alpha = group.evaluate(b.degree)
        i = b.level
        if b.kind is Kind.L and not alpha:
            value = psi.evaluate(l00, algebra.vector(BasisVector.L(zero, i + 1))) / (i + 1)
        elif b.kind is Kind.G and not alpha:
            value = psi.evaluate(l01, algebra.vector(b)) * 2 / (2 * i - 1)
        else:
            value = psi.evaluate(l00, algebra.vector(b))
            if i:
                previous = BasisVector(b.kind, b.degree, i - 1)
                value = value - values[previous] * i
            value = value / alpha
        values[b] = value
    logger.info("平凡化: 在 %d 个基向量上算出 f", len(basis))
    return LinearFunctional(algebra.field, values, domain=basis)


def sector_of(x: BasisVector, y: BasisVector) -> str:
    kinds = {x.kind, y.kind}
    if kinds == {Kind.L}:
        return "LL"
    if kinds == {Kind.G}:
        return "GG"
    return "LG"


@dataclass
class ResidualReport:
    sectors: Dict[str, CheckResult] = field(default_factory=lambda: {s: CheckResult() for s in SECTORS})

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.sectors.values())

    @property
    def checked(self) -> int:
        return sum(r.checked for r in self.sectors.values())

    @property
    def violations(self) -> List[Violation]:
        return [v for s in SECTORS for v in self.sectors[s].violations]


def residual_check(psi: CocycleSpec, f: LinearFunctional, window: Window) -> ResidualReport:
    """
    对窗口内每个有序对计算 φ(x,y) = ψ(x,y) − f([x,y])

    先检查 (L,L) 扇区，再 (L,G)，最后 (G,G)。

    Raises:
        UndefinedFunctionalError: f 在某个括号支撑上没有定义
    """
    algebra: SuperAlgebra = psi.algebra
    report = ResidualReport()
    pairs = [p for p in window_pairs(algebra.window_basis(window)) if not (p[0].is_central or p[1].is_central)]
    for sector in SECTORS:
        result = report.sectors[sector]
        for x, y in pairs:
            if sector_of(x, y) != sector:
                continue
            result.checked += 1
            value = psi.evaluate_basis(x, y) - f.evaluate(algebra.bracket_basis(x, y))
            if value:
                result.violations.append(Violation(f"residual-{sector}", (x, y), value))
        logger.info("残差扇区 %s: 检查 %d 对, 非零 %d 个", sector, result.checked, len(result.violations))
    return report
