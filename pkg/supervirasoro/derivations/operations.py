"""
导子构造与检查
D_φ、内导子 ad_z、Leibniz 检查、次数分解、L_{0,0} 上的内调整
"""
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from supervirasoro.algebra.basis import BasisVector, Kind, Parity, Variant, VariantError
from supervirasoro.algebra.checks import CheckResult, Violation, window_pairs
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.derivations.table import DerivationTable, DerivationTableError
from supervirasoro.field.quadratic import QuadExtScalar
from supervirasoro.grading.functionals import HomZ
from supervirasoro.grading.index_group import GroupElement
from supervirasoro.utils.logger import get_logger
from supervirasoro.utils.parallel import run_partitioned


logger = get_logger("derivations")


def _require_sv_or_w(algebra: SuperAlgebra) -> None:
    if algebra.variant not in (Variant.SV, Variant.W):
        raise VariantError(f"导子构造只适用于 SV / W，当前变体 {algebra.variant.value}")


def d_phi(algebra: SuperAlgebra, phi: HomZ, x: BasisVector) -> Element:
    """D_φ(x_α) = φ(α)·x_α，φ 取恒等时即 D_0"""
    _require_sv_or_w(algebra)
    algebra.validate(x)
    return Element(algebra.variant, {x: phi.evaluate(x.degree)})


def phi_table(algebra: SuperAlgebra, phi: HomZ, domain: Iterable[BasisVector]) -> DerivationTable:
    images = {b: d_phi(algebra, phi, b) for b in domain}
    return DerivationTable(algebra, images, Parity.EVEN, algebra.group.zero())


def inner_table(algebra: SuperAlgebra, z: Element, domain: Iterable[BasisVector]) -> DerivationTable:
    """
    ad_z 在给定定义域上的表

    Raises:
        DerivationTableError: z 不是奇偶齐次的
    """
    algebra.check_element(z)
    if not z.is_parity_homogeneous():
        raise DerivationTableError("内导子 ad_z 要求 z 奇偶齐次")
    parity = z.parity() or Parity.EVEN
    degree = z.degree(algebra.group.zero()) if z.is_degree_homogeneous(algebra.group.zero()) else None
    images = {b: algebra.bracket(z, algebra.vector(b)) for b in domain}
    return DerivationTable(algebra, images, parity, degree)


# ----------------------------------------------------------------------
# Leibniz
# ----------------------------------------------------------------------

def leibniz_residual(table: DerivationTable, x: BasisVector, y: BasisVector) -> Element:
    """D([x,y]) − [D(x),y] − (−1)^{|D||x|}[x,D(y)]"""
    algebra = table.algebra
    vx, vy = algebra.vector(x), algebra.vector(y)
    sign = -1 if int(table.parity) and int(x.parity) else 1
    lhs = table.apply(algebra.bracket_basis(x, y))
    first = algebra.bracket(table.apply_vector(x), vy)
    second = algebra.bracket(vx, table.apply_vector(y)).scale(sign)
    return lhs - first - second


def _leibniz_worker(table: DerivationTable, pairs: List[Tuple[BasisVector, BasisVector]]) -> CheckResult:
    result = CheckResult()
    for x, y in pairs:
        if x not in table.images or y not in table.images:
            result.skipped += 1
            continue
        if not table.covers(table.algebra.bracket_basis(x, y)):
            result.skipped += 1
            continue
        result.checked += 1
        residual = leibniz_residual(table, x, y)
        if residual:
            result.violations.append(Violation("leibniz", (x, y), residual))
    return result


def leibniz_check(table: DerivationTable, window: Window, jobs: int = 1) -> CheckResult:
    """
    窗口内所有有序对上的 Leibniz 检查

    括号支撑出了表定义域的对计为 skipped。
    """
    pairs = window_pairs(table.algebra.window_basis(window))
    result = CheckResult.combine(run_partitioned(_leibniz_worker, table, pairs, jobs))
    logger.info(
        "Leibniz 检查: 检查 %d 对, 跳过 %d 对, 违例 %d 个",
        result.checked, result.skipped, len(result.violations),
    )
    return result


# ----------------------------------------------------------------------
# 次数分解
# ----------------------------------------------------------------------

def _source_degree(table: DerivationTable, b: BasisVector) -> GroupElement:
    return table.algebra.group.zero() if b.is_central else b.degree


def degree_component(table: DerivationTable, gamma: GroupElement) -> DerivationTable:
    """x_α ↦ D(x_α) 的 α+γ 次分量"""
    images = {
        b: image.component(_source_degree(table, b) + gamma)
        for b, image in table.images.items()
    }
    return DerivationTable(table.algebra, images, table.parity, gamma)


def occurring_shifts(table: DerivationTable) -> List[GroupElement]:
    zero = table.algebra.group.zero()
    shifts = set()
    for b, image in table.images.items():
        for d in image.degrees(zero):
            shifts.add(d - _source_degree(table, b))
    return sorted(shifts)


def decompose(table: DerivationTable) -> Dict[GroupElement, DerivationTable]:
    """全部非零次数分量"""
    return {gamma: degree_component(table, gamma) for gamma in occurring_shifts(table)}


def sum_tables(
    algebra: SuperAlgebra,
    tables: Sequence[DerivationTable],
    parity: Optional[Parity] = None,
) -> DerivationTable:
    """逐向量相加，定义域取并"""
    acc: Dict[BasisVector, Element] = {}
    for t in tables:
        for b, image in t.images.items():
            acc[b] = acc[b] + image if b in acc else image
    if parity is None:
        parity = tables[0].parity if tables else Parity.EVEN
    return DerivationTable(algebra, acc, parity)


# ----------------------------------------------------------------------
# 内调整
# ----------------------------------------------------------------------

def adjust_inner(algebra: SuperAlgebra, v: Element) -> Element:
    """
    求有限支撑的 y 使 [y, L_{0,0}] = v

    逐次数 α、逐类型 (L / G) 解 α·b_j + (j+1)·b_{j+1} = −a_j：
    α = 0 时自下而上 b_{j+1} = −a_j/(j+1)；α ≠ 0 时从 v 的最高层 N 向下，
    b_N = −a_N/α，b_j = (−a_j − (j+1)·b_{j+1})/α。

    Raises:
        DerivationTableError: v 含中心项
    """
    _require_sv_or_w(algebra)
    algebra.check_element(v)
    field = algebra.field
    groups: Dict[Tuple[Kind, GroupElement], Dict[int, QuadExtScalar]] = defaultdict(dict)
    for b, c in v.terms:
        if b.is_central:
            raise DerivationTableError("中心项不在 ad L_{0,0} 的像中")
        groups[(b.kind, b.degree)][b.level] = c

    pairs: List[Tuple[BasisVector, QuadExtScalar]] = []
    for (kind, degree), coeffs in sorted(groups.items(), key=lambda t: (t[0][0].value, t[0][1])):
        alpha = algebra.group.evaluate(degree)
        top = max(coeffs)
        make = BasisVector.L if kind is Kind.L else BasisVector.G
        if not alpha:
            for j in range(top + 1):
                a_j = coeffs.get(j)
                if a_j:
                    pairs.append((make(degree, j + 1), -a_j / (j + 1)))
        else:
            alpha_inv = alpha.inverse()
            b_next = field.zero
            for j in range(top, -1, -1):
                a_j = coeffs.get(j, field.zero)
                b_j = (-a_j - b_next * (j + 1)) * alpha_inv
                if b_j:
                    pairs.append((make(degree, j), b_j))
                b_next = b_j
    return algebra.element(pairs)


def subtract_inner(table: DerivationTable, y: Element) -> DerivationTable:
    """D − ad_y，定义域不变"""
    algebra = table.algebra
    images = {
        b: image - algebra.bracket(y, algebra.vector(b))
        for b, image in table.images.items()
    }
    degree = table.degree
    zero = algebra.group.zero()
    if y and (degree is None or y.degrees(zero) != {degree}):
        degree = None
    return DerivationTable(algebra, images, table.parity, degree)


def is_zero_on(table: DerivationTable, vectors: Iterable[BasisVector]) -> bool:
    return all(not table.apply_vector(b) for b in vectors)
