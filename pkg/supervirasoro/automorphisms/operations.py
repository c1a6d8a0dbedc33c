"""
自同构的验证、作用、复合与逆
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from supervirasoro.algebra.basis import BasisError, BasisVector, Kind, Variant, VariantError
from supervirasoro.algebra.checks import CheckResult, Violation, window_pairs
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.automorphisms.params import AutomorphismError, AutParams
from supervirasoro.field.quadratic import QuadExtScalar
from supervirasoro.grading.functionals import Character
from supervirasoro.grading.index_group import GroupElement, GroupValidationError
from supervirasoro.utils.logger import get_logger
from supervirasoro.utils.parallel import run_partitioned


logger = get_logger("automorphisms")


@dataclass
class ValidationResult:
    ok: bool
    reasons: List[str] = field(default_factory=list)
    witness: Optional[QuadExtScalar] = None


def _require_sv_or_w(algebra: SuperAlgebra) -> None:
    if algebra.variant not in (Variant.SV, Variant.W):
        raise VariantError(f"自同构只适用于 SV / W，当前变体 {algebra.variant.value}")


def _unit(algebra: SuperAlgebra, k: int) -> GroupElement:
    coords = [0] * algebra.group.rank
    coords[k] = 1
    return GroupElement(tuple(coords))


def aut_validate(algebra: SuperAlgebra, p: AutParams) -> ValidationResult:
    """
    逐项检查参数，每个失败条件给出单独的原因

    检查 c 可逆、r² = c、∇ ∈ {±1}、c 保持 Ω、Γ 与 s+Γ、τ 取值非零。
    """
    reasons: List[str] = []
    witness = None
    odd = algebra.variant.has_odd
    if odd and p.sign not in (1, -1):
        reasons.append("sign must be +1 or -1")
    if not p.c:
        reasons.append("scaling factor c is zero")
    else:
        if odd:
            if p.r is None:
                reasons.append("square root r is missing")
            elif p.r * p.r != p.c:
                reasons.append("r² ≠ c")
        try:
            check = algebra.group.scaling_preserves(p.c)
        except GroupValidationError as exc:
            reasons.append(str(exc))
        else:
            if not check.preserved:
                reasons.append(check.reason)
                witness = check.witness
    if len(p.tau.values) != algebra.group.rank:
        reasons.append("character has wrong number of values")
    elif not p.tau.is_invertible():
        reasons.append("character value is zero")
    return ValidationResult(not reasons, reasons, witness)


def _image_degree(algebra: SuperAlgebra, degree: GroupElement, c: QuadExtScalar) -> GroupElement:
    image = algebra.group.scale(degree, c)
    if image is None:
        raise AutomorphismError(
            f"c·{algebra.group.format(degree)} = {algebra.group.evaluate(degree) * c} 不在 Ω 中"
        )
    return image


def aut_apply_vector(algebra: SuperAlgebra, p: AutParams, b: BasisVector) -> Element:
    if b.kind is Kind.C:
        raise VariantError("自同构不作用于中心元")
    degree = _image_degree(algebra, b.degree, p.c)
    coeff = p.tau.evaluate(b.degree) * (p.c ** (b.level - 1))
    if b.kind is Kind.L:
        target = BasisVector.L(degree, b.level)
    else:
        if p.r is None:
            raise AutomorphismError("G 的像需要平方根 r")
        coeff = coeff * p.c * p.r.inverse() * p.sign
        target = BasisVector.G(degree, b.level)
    try:
        algebra.validate(target)
    except BasisError as exc:
        raise AutomorphismError(f"像指标不合法: {exc}") from exc
    return Element(algebra.variant, {target: coeff})


def aut_apply(algebra: SuperAlgebra, p: AutParams, x: Element) -> Element:
    """线性延拓的 φ_{τ,c,∇}"""
    _require_sv_or_w(algebra)
    algebra.check_element(x)
    total = algebra.zero()
    for b, c in x.terms:
        total = total + aut_apply_vector(algebra, p, b).scale(c)
    return total


def _hom_worker(context: Tuple[SuperAlgebra, AutParams], pairs) -> CheckResult:
    algebra, p = context
    result = CheckResult()
    for x, y in pairs:
        result.checked += 1
        lhs = aut_apply(algebra, p, algebra.bracket_basis(x, y))
        rhs = algebra.bracket(aut_apply_vector(algebra, p, x), aut_apply_vector(algebra, p, y))
        if lhs != rhs:
            result.violations.append(Violation("homomorphism", (x, y), lhs - rhs))
    return result


def aut_check_hom(algebra: SuperAlgebra, p: AutParams, window: Window, jobs: int = 1) -> CheckResult:
    """φ([x,y]) = [φ(x), φ(y)] 对窗口内所有有序对"""
    _require_sv_or_w(algebra)
    pairs = window_pairs(algebra.window_basis(window))
    result = CheckResult.combine(run_partitioned(_hom_worker, (algebra, p), pairs, jobs))
    logger.info("同态检查: 检查 %d 对, 违例 %d 个", result.checked, len(result.violations))
    return result


def aut_compose(algebra: SuperAlgebra, p1: AutParams, p2: AutParams) -> AutParams:
    """
    (τ₁,c₁,r₁,∇₁)·(τ₂,c₂,r₂,∇₂) = (τ, c₁c₂, r₁r₂, ∇₁∇₂)，τ(α) = τ₁(c₂α)·τ₂(α)

    Raises:
        AutomorphismError: c₂ 把规范基移出 Ω
    """
    values = []
    for k in range(algebra.group.rank):
        e = _unit(algebra, k)
        shifted = _image_degree(algebra, e, p2.c)
        values.append(p1.tau.evaluate(shifted) * p2.tau.evaluate(e))
    r = p1.r * p2.r if p1.r is not None and p2.r is not None else None
    return AutParams(Character(algebra.field, values), p1.c * p2.c, r, p1.sign * p2.sign)


def aut_inverse(algebra: SuperAlgebra, p: AutParams) -> AutParams:
    """(τ(c⁻¹·)⁻¹, c⁻¹, r⁻¹, ∇)"""
    c_inv = p.c.inverse()
    values = []
    for k in range(algebra.group.rank):
        shifted = _image_degree(algebra, _unit(algebra, k), c_inv)
        values.append(p.tau.evaluate(shifted).inverse())
    r = None if p.r is None else p.r.inverse()
    return AutParams(Character(algebra.field, values), c_inv, r, p.sign)


def params_equal(p1: AutParams, p2: AutParams) -> bool:
    return p1.tau == p2.tau and p1.c == p2.c and p1.r == p2.r and p1.sign == p2.sign


def coherence_check(
    algebra: SuperAlgebra,
    p1: AutParams,
    p2: AutParams,
    window: Window,
    composed: Optional[AutParams] = None,
) -> CheckResult:
    """aut_apply(compose(p1,p2), x) = aut_apply(p1, aut_apply(p2, x)) 对窗口每个基向量"""
    composed = composed or aut_compose(algebra, p1, p2)
    result = CheckResult()
    for b in algebra.window_basis(window):
        result.checked += 1
        lhs = aut_apply_vector(algebra, composed, b)
        rhs = aut_apply(algebra, p1, aut_apply_vector(algebra, p2, b))
        if lhs != rhs:
            result.violations.append(Violation("composition", (b,), lhs - rhs))
    return result
