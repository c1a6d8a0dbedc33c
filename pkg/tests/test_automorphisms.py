"""
自同构参数验证、同态检查、复合与逆
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supervirasoro.algebra.basis import Kind, Variant, VariantError
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.automorphisms.operations import (
    aut_apply,
    aut_apply_vector,
    aut_check_hom,
    aut_compose,
    aut_inverse,
    aut_validate,
    coherence_check,
    params_equal,
)
from supervirasoro.automorphisms.params import AutomorphismError, AutParams
from supervirasoro.field.quadratic import QuadraticField
from supervirasoro.grading.functionals import Character
from supervirasoro.grading.index_group import IndexGroup

HALF = Fraction(1, 2)


@pytest.fixture
def sv2(group_sqrt2_s0):
    """Γ = Ω = Z[√2], s = 0 上的 SV"""
    return SuperAlgebra(group_sqrt2_s0, Variant.SV)


@pytest.fixture
def unit_params(field, group_sqrt2_s0):
    """c = 3 + 2√2 = (1 + √2)²"""
    return AutParams(Character.trivial(group_sqrt2_s0), field(3, 2), field(1, 1), 1)


@pytest.fixture
def rank_two_window():
    return Window.from_bound(2, 1, 1)


# ----------------------------------------------------------------------
# 验证
# ----------------------------------------------------------------------

def test_validate_accepts(sv, sv2, unit_params):
    assert aut_validate(sv, AutParams.identity(sv.group)).ok
    assert aut_validate(sv, AutParams.parity_involution(sv.group)).ok
    assert aut_validate(sv2, unit_params).ok


def test_validate_rejects_scaling(sv, field):
    """c = 2 时 c⁻¹·(1/2) = 1/4 不在 Ω 中"""
    p = AutParams(Character.trivial(sv.group), field(2), field(0, 1), 1)
    result = aut_validate(sv, p)
    assert not result.ok
    assert result.reasons == ["scaling does not preserve lattice Ω"]
    assert result.witness == Fraction(1, 4)


def test_validate_collects_every_reason(sv, field):
    p = AutParams(Character(field, [field(0)]), field(1), field(2), 2)
    reasons = aut_validate(sv, p).reasons
    assert "sign must be +1 or -1" in reasons
    assert "r² ≠ c" in reasons
    assert "character value is zero" in reasons
    assert len(reasons) == 3


def test_validate_zero_scaling(sv, field):
    p = AutParams(Character.trivial(sv.group), field(0), field(0), 1)
    assert "scaling factor c is zero" in aut_validate(sv, p).reasons


def test_validate_witt_needs_no_root(witt, field):
    p = AutParams(Character.trivial(witt.group), field(-1), None, 1)
    assert aut_validate(witt, p).ok


def test_validate_missing_root(sv, field):
    p = AutParams(Character.trivial(sv.group), field(-1), None, 1)
    assert aut_validate(sv, p).reasons == ["square root r is missing"]


# ----------------------------------------------------------------------
# 作用与同态检查
# ----------------------------------------------------------------------

def test_apply_examples(sv, sv2, unit_params, field):
    involution = AutParams.parity_involution(sv.group)
    assert aut_apply_vector(sv, involution, sv.G(HALF, 1)) == sv.vector(sv.G(HALF, 1), -1)
    assert aut_apply_vector(sv, involution, sv.L(1, 2)) == sv.vector(sv.L(1, 2))
    # L_{1,1} ↦ c⁰·L_{c,1}
    assert aut_apply_vector(sv2, unit_params, sv2.L(1, 1)) == sv2.vector(sv2.L(field(3, 2), 1))
    # G_{0,0} ↦ r⁻¹·G_{0,0}
    assert aut_apply_vector(sv2, unit_params, sv2.G(0)) == sv2.vector(sv2.G(0), field(-1, 1))
    # L_{0,0} ↦ c⁻¹·L_{0,0}
    assert aut_apply_vector(sv2, unit_params, sv2.L(0)) == sv2.vector(sv2.L(0), field(3, -2))


def test_apply_with_character(sv, field):
    p = AutParams(Character(field, [field(3)]), field(1), field(1), 1)
    # α = −1 对应坐标 −2，τ(α) = 3⁻²
    x = sv.vector(sv.L(-1), 9) + sv.vector(sv.G(HALF))
    assert aut_apply(sv, p, x) == sv.vector(sv.L(-1)) + sv.vector(sv.G(HALF), 3)


def test_apply_rejects_svir(svir):
    with pytest.raises(VariantError):
        aut_apply(svir, AutParams.identity(svir.group), svir.vector(svir.L(1)))


@pytest.mark.parametrize("make", [AutParams.identity, AutParams.parity_involution])
def test_hom_passes(sv, small_window, make):
    result = aut_check_hom(sv, make(sv.group), small_window)
    assert result.passed and result.checked == 15 * 15


def test_hom_passes_unit_scaling(sv2, unit_params, rank_two_window):
    assert aut_check_hom(sv2, unit_params, rank_two_window).passed


def test_hom_passes_with_character(sv2, field, rank_two_window):
    """W 上 c = −1（在 Q(√2) 中没有平方根）与非平凡特征"""
    tau = Character(field, [field(2), field(1, 1)])
    witt = sv2.with_variant(Variant.W)
    p = AutParams(tau, field(-1), None, 1)
    assert aut_validate(witt, p).ok
    assert aut_check_hom(witt, p, rank_two_window).passed


def test_hom_parallel(sv, small_window):
    p = AutParams.parity_involution(sv.group)
    assert aut_check_hom(sv, p, small_window, jobs=2) == aut_check_hom(sv, p, small_window)


def test_bad_sign_breaks_gg(sv, small_window, field):
    """∇ = 2 强行通过时，(G,G) 对上同态失败"""
    p = AutParams(Character.trivial(sv.group), field(1), field(1), 2)
    assert not aut_validate(sv, p).ok
    result = aut_check_hom(sv, p, small_window)
    assert not result.passed
    assert all(v.args[0].kind is Kind.G and v.args[1].kind is Kind.G for v in result.violations)
    witnesses = {v.args for v in result.violations}
    assert (sv.G(HALF), sv.G(-HALF)) in witnesses


# ----------------------------------------------------------------------
# 复合与逆
# ----------------------------------------------------------------------

def test_compose_examples(sv, field):
    identity = AutParams.identity(sv.group)
    involution = AutParams.parity_involution(sv.group)
    assert params_equal(aut_compose(sv, identity, involution), involution)
    assert params_equal(aut_compose(sv, involution, involution), identity)
    p1 = AutParams(Character(field, [field(2)]), field(1), field(1), 1)
    p2 = AutParams(Character(field, [field(3)]), field(1), field(1), 1)
    assert aut_compose(sv, p1, p2).tau.values == (field(6),)


def test_compose_shifts_character(sv, field):
    """τ(α) = τ₁(c₂α)·τ₂(α)，c₂ = −1 时得到 (1/2)·3"""
    p1 = AutParams(Character(field, [field(2)]), field(1), field(1), 1)
    p2 = AutParams(Character(field, [field(3)]), field(-1), None, 1)
    composed = aut_compose(sv, p1, p2)
    assert composed.tau.values == (field(Fraction(3, 2)),)
    assert composed.c == -1 and composed.r is None


def test_compose_out_of_lattice(sv, field):
    p = AutParams(Character.trivial(sv.group), field(HALF), None, 1)
    with pytest.raises(AutomorphismError):
        aut_compose(sv, AutParams.identity(sv.group), p)


def test_inverse(sv2, unit_params, field, rank_two_window):
    inverse = aut_inverse(sv2, unit_params)
    assert inverse.c == field(3, -2) and inverse.r == field(-1, 1)
    identity = AutParams.identity(sv2.group)
    assert params_equal(aut_compose(sv2, unit_params, inverse), identity)
    assert params_equal(aut_compose(sv2, inverse, unit_params), identity)
    assert coherence_check(sv2, unit_params, inverse, rank_two_window).passed


def test_coherence(sv2, unit_params, field, rank_two_window):
    p2 = AutParams(Character(field, [field(2), field(-1)]), field(1), field(1), -1)
    result = coherence_check(sv2, unit_params, p2, rank_two_window)
    assert result.passed and result.checked == len(sv2.window_basis(rank_two_window))


def test_coherence_detects_wrong_composition(sv, small_window):
    involution = AutParams.parity_involution(sv.group)
    result = coherence_check(sv, involution, involution, small_window, composed=involution)
    assert not result.passed
    assert all(v.args[0].kind is Kind.G for v in result.violations)


_F = QuadraticField(2)
_GROUP = IndexGroup.canonical(_F, [_F(1), _F.sqrt_d], _F(0))
_SV = SuperAlgebra(_GROUP, Variant.SV)
_UNITS = [(_F(1), _F(1)), (_F(3, 2), _F(1, 1)), (_F(3, -2), _F(-1, 1)), (_F(17, 12), _F(3, 2))]

params = st.builds(
    lambda unit, t1, t2, sign: AutParams(Character(_F, [_F(t1), _F(t2)]), unit[0], unit[1], sign),
    st.sampled_from(_UNITS),
    st.integers(1, 4),
    st.integers(-3, 3).filter(bool),
    st.sampled_from([1, -1]),
)


@settings(max_examples=50, deadline=None)
@given(params, params, params)
def test_compose_is_associative(p1, p2, p3):
    left = aut_compose(_SV, aut_compose(_SV, p1, p2), p3)
    right = aut_compose(_SV, p1, aut_compose(_SV, p2, p3))
    assert params_equal(left, right)


@settings(max_examples=50, deadline=None)
@given(params)
def test_inverse_is_two_sided(p):
    identity = AutParams.identity(_GROUP)
    inverse = aut_inverse(_SV, p)
    assert params_equal(aut_compose(_SV, p, inverse), identity)
    assert params_equal(aut_compose(_SV, inverse, p), identity)
