"""
窗口上的代数检查：超反对称、超 Jacobi、分次、第 0 层切片、中心
"""
import random
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Sequence, Tuple, Union

from supervirasoro.algebra.basis import BasisVector, Kind, Variant
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.field.quadratic import QuadExtScalar
from supervirasoro.linalg.sparse import nullspace
from supervirasoro.utils.logger import get_logger
from supervirasoro.utils.parallel import run_partitioned


logger = get_logger("checks")


@dataclass(frozen=True)
class Violation:
    """一条违例：检查名、参与的基向量、非零残差"""

    check: str
    args: Tuple[BasisVector, ...]
    residual: Union[Element, QuadExtScalar, None] = None
    note: Optional[str] = None


@dataclass
class CheckResult:
    """枚举型检查的汇总"""

    checked: int = 0
    skipped: int = 0
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "CheckResult") -> "CheckResult":
        self.checked += other.checked
        self.skipped += other.skipped
        self.violations.extend(other.violations)
        return self

    @classmethod
    def combine(cls, parts: Sequence["CheckResult"]) -> "CheckResult":
        total = cls()
        for part in parts:
            total.merge(part)
        return total


@dataclass(frozen=True)
class CentralityResult:
    central: bool
    witness: Optional[BasisVector] = None
    value: Optional[Element] = None


@dataclass
class AxiomReport:
    pairs: CheckResult
    triples: CheckResult
    grading: CheckResult
    slice: Optional[CheckResult]
    sampled: bool

    @property
    def passed(self) -> bool:
        parts = [self.pairs, self.triples, self.grading] + ([self.slice] if self.slice else [])
        return all(p.passed for p in parts)


# ----------------------------------------------------------------------
# 进程池 worker（模块级，便于 pickle）
# ----------------------------------------------------------------------

def _skew_worker(algebra: SuperAlgebra, pairs: List[Tuple[BasisVector, BasisVector]]) -> CheckResult:
    result = CheckResult()
    for x, y in pairs:
        result.checked += 1
        residual = algebra.skew_residual(x, y)
        if residual:
            result.violations.append(Violation("skew", (x, y), residual))
    return result


def _jacobi_worker(algebra: SuperAlgebra, triples: List[Tuple[BasisVector, ...]]) -> CheckResult:
    result = CheckResult()
    for x, y, z in triples:
        result.checked += 1
        residual = algebra.jacobi_residual(x, y, z)
        if residual:
            result.violations.append(Violation("jacobi", (x, y, z), residual))
    return result


def _grading_worker(algebra: SuperAlgebra, pairs: List[Tuple[BasisVector, BasisVector]]) -> CheckResult:
    result = CheckResult()
    zero = algebra.group.zero()
    for x, y in pairs:
        result.checked += 1
        bracket = algebra.bracket_basis(x, y)
        expected_degree = (zero if x.is_central else x.degree) + (zero if y.is_central else y.degree)
        expected_parity = (int(x.parity) + int(y.parity)) % 2
        top = (x.level or 0) + (y.level or 0)
        for b, _ in bracket.terms:
            degree = zero if b.is_central else b.degree
            if degree != expected_degree:
                result.violations.append(Violation("grading", (x, y), bracket, "degree"))
                break
            if int(b.parity) != expected_parity:
                result.violations.append(Violation("grading", (x, y), bracket, "parity"))
                break
            if not b.is_central and not (top - 1 <= b.level <= top):
                result.violations.append(Violation("grading", (x, y), bracket, "level"))
                break
    return result


# ----------------------------------------------------------------------
# 公开操作
# ----------------------------------------------------------------------

def window_pairs(basis: Sequence[BasisVector]) -> List[Tuple[BasisVector, BasisVector]]:
    return list(product(basis, repeat=2))


def sample_triples(
    basis: Sequence[BasisVector],
    count: int,
    seed: int,
) -> List[Tuple[BasisVector, BasisVector, BasisVector]]:
    """用固定种子抽样三元组，结果只依赖于 (basis, count, seed)"""
    rng = random.Random(seed)
    n = len(basis)
    return [
        (basis[rng.randrange(n)], basis[rng.randrange(n)], basis[rng.randrange(n)])
        for _ in range(count)
    ]


def check_skew(algebra: SuperAlgebra, window: Window, jobs: int = 1) -> CheckResult:
    pairs = window_pairs(algebra.window_basis(window))
    return CheckResult.combine(run_partitioned(_skew_worker, algebra, pairs, jobs))


def check_jacobi(
    algebra: SuperAlgebra,
    window: Window,
    triples: Optional[List[Tuple[BasisVector, ...]]] = None,
    jobs: int = 1,
) -> CheckResult:
    if triples is None:
        triples = list(product(algebra.window_basis(window), repeat=3))
    return CheckResult.combine(run_partitioned(_jacobi_worker, algebra, triples, jobs))


def check_grading(algebra: SuperAlgebra, window: Window, jobs: int = 1) -> CheckResult:
    """每个括号项的次数为 α+β、奇偶为 |x|+|y|、层数在 [i+j−1, i+j] 内"""
    pairs = window_pairs(algebra.window_basis(window))
    return CheckResult.combine(run_partitioned(_grading_worker, algebra, pairs, jobs))


def check_level_zero_slice(algebra: SuperAlgebra, window: Window) -> CheckResult:
    """SV 的第 0 层在括号下逐项重现 SVir0"""
    sv = algebra.with_variant(Variant.SV)
    svir0 = algebra.with_variant(Variant.SVIR0)
    basis = svir0.window_basis(window)
    result = CheckResult()
    for x, y in window_pairs(basis):
        result.checked += 1
        left = sv.bracket_basis(x, y)
        right = svir0.bracket_basis(x, y)
        if left.as_dict() != right.as_dict():
            result.violations.append(
                Violation("slice", (x, y), Element(Variant.SV, right.as_dict()) - left)
            )
    return result


def check_axioms(
    algebra: SuperAlgebra,
    window: Window,
    seed: int,
    max_exhaustive_triples: int,
    random_triples: int,
    jobs: int = 1,
) -> AxiomReport:
    """
    窗口上的公理检查

    所有有序对穷举；三元组数目不超过 max_exhaustive_triples 时穷举，否则按种子抽样 random_triples 个。
    """
    basis = algebra.window_basis(window)
    n = len(basis)
    sampled = n ** 3 > max_exhaustive_triples
    logger.info(
        "公理检查: 变体 %s, 窗口基 %d 个向量, 三元组%s",
        algebra.variant.value,
        n,
        f"抽样 {random_triples} 个" if sampled else f"穷举 {n ** 3} 个",
    )
    triples = sample_triples(basis, random_triples, seed) if sampled else None
    pairs = check_skew(algebra, window, jobs)
    jacobi = check_jacobi(algebra, window, triples, jobs)
    grading = check_grading(algebra, window, jobs)
    slice_result = None
    if algebra.variant in (Variant.SV, Variant.SVIR0):
        slice_result = check_level_zero_slice(algebra, window)
    return AxiomReport(pairs, jacobi, grading, slice_result, sampled)


def probe_order(b: BasisVector) -> Tuple:
    """默认探针顺序：低层在前，偶在奇前，次数由近及远，同模长时正次数在前，C 最后"""
    if b.degree is None:
        return (1,)
    coords = b.degree.coords
    return (0, b.level, b.kind is not Kind.L, sum(abs(c) for c in coords), tuple(-c for c in coords))


def is_central(
    algebra: SuperAlgebra,
    z: Element,
    window: Window,
    probes: Optional[Sequence[BasisVector]] = None,
) -> CentralityResult:
    """
    z 是否与窗口内（或给定探针中）每个基向量交换

    未给探针时按 probe_order 扫描窗口基，例如 z = L_{0,0} 的见证是 L_{1,0}。

    Returns:
        不交换时给出第一个见证向量及 [z, witness]
    """
    algebra.check_element(z)
    if probes is None:
        probes = sorted(algebra.window_basis(window), key=probe_order)
    for b in probes:
        value = algebra.bracket(z, algebra.vector(b))
        if value:
            return CentralityResult(False, b, value)
    return CentralityResult(True)


def window_center(algebra: SuperAlgebra, window: Window) -> List[Element]:
    """
    支撑在窗口内、与窗口所有基向量交换的元素空间的基

    对未知系数 x_b 解 Σ x_b [b, y] = 0（y 取遍窗口基）。
    """
    basis = algebra.window_basis(window)
    equations = []
    for y in basis:
        rows = {}
        for b in basis:
            for k, c in algebra.bracket_basis(b, y).terms:
                rows.setdefault(k, {})[b] = c
        equations.extend(rows.values())
    solutions = nullspace(equations, basis, algebra.field)
    center = [Element(algebra.variant, s) for s in solutions]
    logger.info("窗口中心维数: %d", len(center))
    return center
