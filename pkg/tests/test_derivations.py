"""
导子测试：D_φ、内导子、Leibniz、次数分解、内调整
"""
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from supervirasoro.algebra.basis import Parity, Variant, VariantError
from supervirasoro.algebra.span import generate_span, span_generators
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.derivations.operations import (
    adjust_inner,
    d_phi,
    decompose,
    degree_component,
    inner_table,
    is_zero_on,
    leibniz_check,
    occurring_shifts,
    phi_table,
    subtract_inner,
    sum_tables,
)
from supervirasoro.derivations.table import DerivationTable, DerivationTableError
from supervirasoro.field.quadratic import QuadraticField
from supervirasoro.grading.functionals import HomZ
from supervirasoro.grading.index_group import IndexGroup

HALF = Fraction(1, 2)


def test_d_phi_examples(sv, group_sqrt2, field):
    phi0 = HomZ.identity(sv.group)
    assert d_phi(sv, phi0, sv.L(2, 3)) == sv.vector(sv.L(2, 3), 2)
    assert not d_phi(sv, HomZ.zero(sv.group), sv.G(HALF, 1))
    algebra = SuperAlgebra(group_sqrt2, Variant.SV)
    phi = HomZ(field, [field(3), field(0)])
    g = algebra.G(field(Fraction(3, 2), 1), 1)
    assert d_phi(algebra, phi, g) == algebra.vector(g, 9)


def test_d_phi_requires_sv_or_w(svir):
    with pytest.raises(VariantError):
        d_phi(svir, HomZ.identity(svir.group), svir.L(1))


def test_phi_table_passes(sv, small_window):
    table = phi_table(sv, HomZ.identity(sv.group), sv.window_basis(small_window.hull()))
    result = leibniz_check(table, small_window)
    assert result.passed and result.skipped == 0


def test_odd_inner_derivation(sv, small_window):
    table = inner_table(sv, sv.vector(sv.G(HALF)), sv.window_basis(small_window.hull()))
    assert table.parity is Parity.ODD
    result = leibniz_check(table, small_window)
    assert result.passed and result.checked == 15 * 15


def test_inner_requires_homogeneous_parity(sv, small_window):
    z = sv.vector(sv.L(0)) + sv.vector(sv.G(HALF))
    with pytest.raises(DerivationTableError):
        inner_table(sv, z, sv.window_basis(small_window))


def test_leibniz_violation(sv, small_window):
    """D: L_{0,0} ↦ L_{1,0}，其余 ↦ 0，在 (L_{0,0}, L_{0,1}) 上残差为 L_{1,1}"""
    images = {b: sv.zero() for b in sv.window_basis(small_window)}
    images[sv.L(0)] = sv.vector(sv.L(1))
    table = DerivationTable(sv, images)
    result = leibniz_check(table, small_window)
    assert not result.passed
    by_pair = {v.args: v.residual for v in result.violations}
    assert by_pair[(sv.L(0), sv.L(0, 1))] == sv.vector(sv.L(1, 1))
    assert by_pair[(sv.L(0), sv.L(-1))] == sv.vector(sv.L(0), 2)


def test_leibniz_skips_outside_domain(sv, small_window):
    table = phi_table(sv, HomZ.identity(sv.group), sv.window_basis(small_window))
    result = leibniz_check(table, small_window)
    assert result.passed
    assert result.skipped > 0
    assert result.checked + result.skipped == 15 * 15


def test_table_validation(sv):
    with pytest.raises(DerivationTableError):
        DerivationTable(sv, {sv.L(0): sv.vector(sv.G(HALF))})
    with pytest.raises(DerivationTableError):
        DerivationTable(sv, {sv.L(0): sv.vector(sv.L(1))}, degree=sv.group.zero())
    table = DerivationTable(sv, {sv.L(0): sv.vector(sv.L(1))})
    with pytest.raises(DerivationTableError):
        table.apply_vector(sv.L(-1))


def random_phi_and_z(algebra, window, seed):
    rng = random.Random(seed)
    field = algebra.field
    phi = HomZ(field, [field(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(algebra.group.rank)])
    parity = rng.choice([Parity.EVEN, Parity.ODD])
    candidates = [b for b in algebra.window_basis(window) if b.parity is parity]
    z = algebra.element((rng.choice(candidates), rng.randint(-3, 3) or 1) for _ in range(3))
    return phi, z


@pytest.mark.parametrize("seed", range(5))
def test_random_phi_and_inner_pass(sv, small_window, seed):
    """随机 φ 与随机齐次 z 给出的表都通过 Leibniz 检查"""
    domain = sv.window_basis(small_window.hull())
    phi, z = random_phi_and_z(sv, small_window, seed)
    assert leibniz_check(phi_table(sv, phi, domain), small_window).passed
    assert leibniz_check(inner_table(sv, z, domain), small_window).passed


@pytest.mark.slow
def test_random_phi_and_inner_pass_many(group_sqrt2):
    """50 个随机 φ、50 个随机 z，Γ = Z + √2Z 上的窗口"""
    algebra = SuperAlgebra(group_sqrt2, Variant.SV)
    window = Window.from_bound(2, 1, 2)
    domain = algebra.window_basis(window.hull())
    for seed in range(50):
        phi, z = random_phi_and_z(algebra, window, seed)
        assert leibniz_check(phi_table(algebra, phi, domain), window).passed, seed
        assert leibniz_check(inner_table(algebra, z, domain), window).passed, seed


# ----------------------------------------------------------------------
# 次数分解
# ----------------------------------------------------------------------

def test_degree_component(sv, small_window):
    images = {b: sv.zero() for b in sv.window_basis(small_window)}
    images[sv.L(0)] = sv.vector(sv.L(1)) + sv.vector(sv.L(0, 1))
    table = DerivationTable(sv, images)
    one = sv.group.member(1)
    component = degree_component(table, one)
    assert component.apply_vector(sv.L(0)) == sv.vector(sv.L(1))
    assert component.degree == one
    assert occurring_shifts(table) == [sv.group.zero(), one]
    assert not degree_component(table, sv.group.member(-1)).nonzero()


def test_decompose_sums_back(sv, small_window):
    z = sv.vector(sv.L(1)) + sv.vector(sv.L(-1, 2), 3)
    table = inner_table(sv, z, sv.window_basis(small_window))
    parts = decompose(table)
    assert set(parts) == {sv.group.member(1), sv.group.member(-1)}
    assert sum_tables(sv, list(parts.values())) == table


# ----------------------------------------------------------------------
# 内调整
# ----------------------------------------------------------------------

def test_adjust_inner_oracles(sv, sv_s0):
    l00 = sv.vector(sv.L(0))
    assert adjust_inner(sv, sv.vector(sv.L(0, 1))) == sv.vector(sv.L(0, 2), -HALF)
    assert adjust_inner(sv, sv.vector(sv.L(1))) == sv.vector(sv.L(1), -1)
    v = sv_s0.vector(sv_s0.G(0))
    y = adjust_inner(sv_s0, v)
    assert y == sv_s0.vector(sv_s0.G(0, 1), -1)
    assert sv_s0.bracket(y, sv_s0.vector(sv_s0.L(0))) == v
    assert sv.bracket(adjust_inner(sv, sv.zero()), l00) == sv.zero()


def test_adjust_inner_rejects_center(svir):
    with pytest.raises(VariantError):
        adjust_inner(svir, svir.vector(svir.C()))


_F = QuadraticField(2)
_GROUP = IndexGroup.canonical(_F, [_F(1), _F.sqrt_d], _F(HALF))
_SV = SuperAlgebra(_GROUP, Variant.SV)
_BASIS = _SV.window_basis(Window.from_bound(2, 2, 4))

terms = st.lists(
    st.tuples(
        st.sampled_from(_BASIS),
        st.builds(_F, st.integers(-9, 9), st.integers(-9, 9)),
    ),
    min_size=0,
    max_size=6,
)


def check_adjust_inner(pairs):
    v = _SV.element(pairs)
    y = adjust_inner(_SV, v)
    assert _SV.bracket(y, _SV.vector(_SV.L(0))) == v


@settings(max_examples=100, deadline=None)
@given(terms)
def test_adjust_inner_solves(pairs):
    """[adjust_inner(v), L_{0,0}] = v"""
    check_adjust_inner(pairs)


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(terms)
def test_adjust_inner_solves_many(pairs):
    check_adjust_inner(pairs)


def test_subtract_inner(sv, small_window):
    """D − ad_y 在 L_{0,0} 上为零，且仍是导子"""
    domain = sv.window_basis(small_window.hull())
    z = sv.vector(sv.L(1)) + sv.vector(sv.L(1, 1), 2)
    table = inner_table(sv, z, domain)
    y = adjust_inner(sv, table.apply_vector(sv.L(0)))
    reduced = subtract_inner(table, y)
    assert is_zero_on(reduced, [sv.L(0)])
    assert leibniz_check(reduced, small_window).passed
    # ad_z 本身被完全消去
    assert not reduced.nonzero()


# ----------------------------------------------------------------------
# 生成元上为零的导子
# ----------------------------------------------------------------------

@pytest.mark.parametrize(
    "make_z",
    [
        lambda a: a.vector(a.L(1, 1)) + a.vector(a.L(1), 2),
        lambda a: a.vector(a.G(HALF, 1)) + a.vector(a.G(HALF), 3),
    ],
    ids=["even", "odd"],
)
def test_reduced_derivation_vanishes_on_span(sv, small_window, make_z):
    """次数非零的导子约化后在生成元上为零，于是在生成元能到达的所有向量上为零"""
    z = make_z(sv)
    table = inner_table(sv, z, sv.window_basis(small_window.hull()))
    assert table.degree is not None and not table.degree.is_zero()
    reduced = subtract_inner(table, adjust_inner(sv, table.apply_vector(sv.L(0))))
    assert leibniz_check(reduced, small_window).passed
    assert is_zero_on(reduced, span_generators(sv, small_window))
    report = generate_span(sv, small_window)
    assert report.reached
    assert is_zero_on(reduced, report.reached)


def test_nonzero_off_generators_breaks_leibniz(sv, small_window):
    """只在 L_{0,2} 上非零的 1 次表：生成元上为零，但不满足 Leibniz"""
    basis = sv.window_basis(small_window)
    images = {b: sv.zero() for b in basis}
    images[sv.L(0, 2)] = sv.vector(sv.L(1, 2))
    table = DerivationTable(sv, images, degree=sv.group.member(1))
    assert is_zero_on(table, span_generators(sv, small_window))
    assert not is_zero_on(table, generate_span(sv, small_window).reached)
    result = leibniz_check(table, small_window)
    assert not result.passed
    by_pair = {v.args: v.residual for v in result.violations}
    # [L_{0,0}, L_{0,2}] = 2L_{0,1}，[L_{0,0}, L_{1,2}] = L_{1,2} + 2L_{1,1}
    assert by_pair[(sv.L(0), sv.L(0, 2))] == -(sv.vector(sv.L(1, 2)) + sv.vector(sv.L(1, 1), 2))
