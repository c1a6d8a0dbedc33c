"""
生成元闭包：{L_{α,0}} ∪ {L_{0,1}} ∪ {G_{μ,0}} 在括号下张成的窗口子空间
"""
from dataclasses import dataclass
from typing import Dict, List

from supervirasoro.algebra.basis import BasisVector, Variant, VariantError
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.linalg.sparse import RowSpace
from supervirasoro.utils.logger import get_logger


logger = get_logger("span")


@dataclass
class SpanReport:
    generators: List[BasisVector]
    reached: List[BasisVector]
    missing: List[BasisVector]
    rank: int
    rounds: int


def span_generators(algebra: SuperAlgebra, window: Window) -> List[BasisVector]:
    group = algebra.group
    zero = group.zero()
    gens = []
    for degree in window.sorted_degrees():
        if group.in_gamma(degree):
            gens.append(BasisVector.L(degree, 0))
        if group.in_s_plus_gamma(degree):
            gens.append(BasisVector.G(degree, 0))
    if window.i_max >= 1:
        gens.append(BasisVector.L(zero, 1))
    return sorted(gens, key=BasisVector.sort_key)


def generate_span(algebra: SuperAlgebra, window: Window) -> SpanReport:
    """
    反复对张成集的成员两两求括号，投影回窗口；每轮把全部候选一次性交给行空间判定独立性，
    直到不再增长

    Raises:
        VariantError: 变体不是 SV
    """
    if algebra.variant is not Variant.SV:
        raise VariantError(f"generate_span 只适用于 SV，当前变体 {algebra.variant.value}")
    basis = algebra.window_basis(window)
    inside = set(basis)
    space: RowSpace[BasisVector] = RowSpace(basis, algebra.field)

    generators = span_generators(algebra, window)
    seeds = [algebra.vector(g) for g in generators]
    members: List[Element] = [seeds[i] for i in space.extend([v.as_dict() for v in seeds])]
    frontier = list(members)

    rounds = 0
    while frontier:
        rounds += 1
        candidates: Dict[Element, None] = {}
        for a in frontier:
            # [b, a] = ±[a, b]，只需一个方向
            for b in members:
                projected = algebra.bracket(a, b).project(inside.__contains__)
                if projected:
                    candidates.setdefault(projected)
        pool = list(candidates)
        fresh = [pool[i] for i in space.extend([c.as_dict() for c in pool])]
        members.extend(fresh)
        logger.debug("第 %d 轮: 候选 %d 个, 新增 %d 个, 秩 %d", rounds, len(pool), len(fresh), space.rank)
        frontier = fresh

    covered = space.unit_keys()
    reached = [b for b in basis if b in covered]
    missing = [b for b in basis if b not in covered]
    logger.info("生成元闭包: 到达 %d 个, 缺失 %d 个, 共 %d 轮", len(reached), len(missing), rounds)
    return SpanReport(generators, reached, missing, space.rank, rounds)
