"""
上闭链检查、平凡化与残差测试
"""
import random
from fractions import Fraction

import pytest

from supervirasoro.algebra.basis import Kind, VariantError
from supervirasoro.algebra.checks import window_pairs
from supervirasoro.algebra.window import Window
from supervirasoro.cohomology.cocycle import (
    Coboundary,
    CocycleSpecError,
    LinearFunctional,
    OutOfWindowError,
    TableCocycle,
    UndefinedFunctionalError,
    cocycle_eval,
    is_cocycle,
    svir_central_cocycle,
)
from supervirasoro.cohomology.trivialize import residual_check, sector_of, trivialize

HALF = Fraction(1, 2)


def random_functional(algebra, vectors, seed):
    rng = random.Random(seed)
    field = algebra.field
    values = {b: field(rng.randint(-9, 9), rng.randint(-9, 9)) for b in vectors}
    return LinearFunctional(field, values)


# ----------------------------------------------------------------------
# 线性泛函与上边缘
# ----------------------------------------------------------------------

def test_functional_domain(sv):
    g = LinearFunctional(sv.field, {sv.L(0): 1}, domain=[sv.L(0), sv.L(1)])
    assert g(sv.vector(sv.L(0), 3) + sv.vector(sv.L(1))) == 3
    with pytest.raises(UndefinedFunctionalError):
        g.value(sv.L(-1))
    assert not g.defined_on(sv.vector(sv.L(-1)))


def test_coboundary_value(sv):
    """g(L_{0,0}) = 1 时 ψ_g(L_{0,0}, L_{0,1}) = g(L_{0,0}) = 1"""
    g = LinearFunctional(sv.field, {sv.L(0): 1})
    psi = Coboundary(sv, g)
    assert cocycle_eval(psi, sv.vector(sv.L(0)), sv.vector(sv.L(0, 1))) == 1
    assert psi.evaluate_basis(sv.L(0, 1), sv.L(0)) == -1


@pytest.mark.parametrize("seed", range(3))
def test_coboundary_is_cocycle(sv, small_window, seed):
    g = random_functional(sv, sv.window_basis(small_window.hull()), seed)
    result = is_cocycle(Coboundary(sv, g), small_window)
    assert result.passed
    n = len(sv.window_basis(small_window))
    assert result.checked == n * n + n ** 3


def test_cocycle_parallel(sv, small_window):
    g = random_functional(sv, sv.window_basis(small_window.hull()), 11)
    psi = Coboundary(sv, g)
    assert is_cocycle(psi, small_window, jobs=3) == is_cocycle(psi, small_window)


# ----------------------------------------------------------------------
# SVir0 中心上闭链
# ----------------------------------------------------------------------

def test_central_cocycle_values(svir0, wide_window):
    psi = svir_central_cocycle(svir0, wide_window)
    assert psi.evaluate_basis(svir0.L(2), svir0.L(-2)) == HALF
    assert psi.evaluate_basis(svir0.L(-2), svir0.L(2)) == -HALF
    assert psi.evaluate_basis(svir0.L(1), svir0.L(-1)) == 0
    g32, gm32 = svir0.G(Fraction(3, 2)), svir0.G(Fraction(-3, 2))
    assert psi.evaluate_basis(g32, gm32) == Fraction(-2, 3)
    assert psi.evaluate_basis(gm32, g32) == Fraction(-2, 3)
    assert psi.evaluate_basis(svir0.G(HALF), svir0.G(-HALF)) == 0
    assert psi.evaluate_basis(svir0.L(1), svir0.G(HALF)) == 0


def test_central_cocycle_passes(svir0, wide_window):
    result = is_cocycle(svir_central_cocycle(svir0, wide_window), wide_window)
    assert result.passed
    assert result.skipped > 0


def test_central_cocycle_full_window(svir0):
    """α ∈ {−3, …, 3}、μ ∈ ±{1/2, 3/2, 5/2}：表建在括号包络上，窗口上不跳过任何三元组"""
    window = Window.from_bound(1, 6, 0)
    psi = svir_central_cocycle(svir0, window.hull())
    n = len(svir0.window_basis(window))
    assert n == 13
    result = is_cocycle(psi, window)
    assert result.passed
    assert result.skipped == 0 and result.checked == n * n + n ** 3
    assert psi.evaluate_basis(svir0.L(2), svir0.L(-2)) == HALF
    assert psi.evaluate_basis(svir0.L(3), svir0.L(-3)) == 2
    assert psi.evaluate_basis(svir0.G(Fraction(3, 2)), svir0.G(Fraction(-3, 2))) == Fraction(-2, 3)
    assert psi.evaluate_basis(svir0.G(Fraction(5, 2)), svir0.G(Fraction(-5, 2))) == -2


def test_central_cocycle_requires_svir0(sv, wide_window):
    with pytest.raises(VariantError):
        svir_central_cocycle(sv, wide_window)


def test_opposite_gg_sign_fails(svir0, wide_window):
    """(G,G) 项取 +(μ²−1/4)/3 时，(G_{3/2}, G_{1/2}, L_{−2}) 上残差为 −2"""
    correct = svir_central_cocycle(svir0, wide_window)
    entries = [(x, y, -v if x.kind is Kind.G else v) for (x, y), v in correct.entries.items()]
    psi = TableCocycle(svir0, wide_window, entries)
    result = is_cocycle(psi, wide_window)
    assert not result.passed
    by_args = {v.args: v.residual for v in result.violations}
    witness = (svir0.G(Fraction(3, 2)), svir0.G(HALF), svir0.L(-2))
    assert by_args[witness] == -2


def test_perturbed_table_fails(svir0, wide_window):
    """在中心上闭链上加 ψ(L_1, L_0) = 1，(L_2, L_{−1}, L_0) 上残差为 3"""
    correct = svir_central_cocycle(svir0, wide_window)
    entries = [(x, y, v) for (x, y), v in correct.entries.items()]
    entries.append((svir0.L(1), svir0.L(0), 1))
    result = is_cocycle(TableCocycle(svir0, wide_window, entries), wide_window)
    assert not result.passed
    by_args = {v.args: v.residual for v in result.violations}
    assert by_args[(svir0.L(2), svir0.L(-1), svir0.L(0))] == 3


def test_table_validation(svir0, wide_window):
    with pytest.raises(CocycleSpecError):
        TableCocycle(svir0, wide_window, [(svir0.L(1), svir0.L(1), 1)])
    odd = TableCocycle(svir0, wide_window, [(svir0.G(HALF), svir0.G(HALF), 1)])
    assert odd.evaluate_basis(svir0.G(HALF), svir0.G(HALF)) == 1
    with pytest.raises(CocycleSpecError):
        TableCocycle(svir0, wide_window, [(svir0.L(1), svir0.L(0), 1), (svir0.L(0), svir0.L(1), 1)])
    consistent = TableCocycle(
        svir0, wide_window, [(svir0.L(1), svir0.L(0), 1), (svir0.L(0), svir0.L(1), -1)]
    )
    assert consistent.evaluate_basis(svir0.L(0), svir0.L(1)) == -1


def test_table_out_of_window(svir0, wide_window):
    with pytest.raises(OutOfWindowError):
        TableCocycle(svir0, wide_window, [(svir0.L(3), svir0.L(-3), 2)])
    psi = TableCocycle(svir0, wide_window)
    assert psi.evaluate_basis(svir0.L(1), svir0.L(2)) == 0
    with pytest.raises(OutOfWindowError):
        psi.evaluate_basis(svir0.L(3), svir0.L(0))


# ----------------------------------------------------------------------
# 平凡化
# ----------------------------------------------------------------------

@pytest.mark.parametrize("fixture", ["sv", "sv_s0", "witt"])
@pytest.mark.parametrize("seed", range(3))
def test_trivialize_recovers_g(request, fixture, seed, small_window):
    """ψ = ψ_g 时，窗口上算出的 f 与 g 一致"""
    algebra = request.getfixturevalue(fixture)
    g = random_functional(algebra, algebra.window_basis(small_window.hull()), seed)
    f = trivialize(Coboundary(algebra, g), small_window)
    assert f.agrees_with(g, algebra.window_basis(small_window)) == []


def test_trivialize_odd_level_zero(sv_s0, small_window):
    """s = 0：只有 g(G_{0,2}) = 5 时 f 也只在 G_{0,2} 上非零"""
    g = LinearFunctional(sv_s0.field, {sv_s0.G(0, 2): 5})
    f = trivialize(Coboundary(sv_s0, g), small_window)
    assert f.values == {sv_s0.G(0, 2): sv_s0.field(5)}


def test_trivialize_zero(sv, small_window):
    f = trivialize(TableCocycle(sv, small_window.hull()), small_window)
    assert f.values == {}
    assert f.domain == frozenset(sv.window_basis(small_window))


def test_trivialize_needs_table_coverage(sv, small_window):
    """表窗口不含 L_{0,3} 时无法递推 f(L_{0,2})"""
    with pytest.raises(OutOfWindowError):
        trivialize(TableCocycle(sv, small_window), small_window)


def test_trivialize_requires_sv_or_w(svir0, wide_window):
    with pytest.raises(VariantError):
        trivialize(svir_central_cocycle(svir0, wide_window), wide_window)


# ----------------------------------------------------------------------
# 残差
# ----------------------------------------------------------------------

def test_sector_of(sv):
    assert sector_of(sv.L(0), sv.L(1)) == "LL"
    assert sector_of(sv.G(HALF), sv.L(1)) == "LG"
    assert sector_of(sv.G(HALF), sv.G(-HALF)) == "GG"


def test_residual_vanishes(sv, small_window):
    g = random_functional(sv, sv.window_basis(small_window.hull()), 5)
    psi = Coboundary(sv, g)
    f = trivialize(psi, small_window.hull())
    report = residual_check(psi, f, small_window)
    assert report.passed
    assert {s: r.checked for s, r in report.sectors.items()} == {"LL": 81, "LG": 108, "GG": 36}


@pytest.mark.slow
def test_trivialize_and_residual_many(sv):
    """200 个随机 g：f 在窗口上等于 g，三个扇区的残差全为零"""
    window = Window.from_bound(1, 3, 2)
    hull_basis = sv.window_basis(window.hull())
    window_basis = sv.window_basis(window)
    for seed in range(200):
        psi = Coboundary(sv, random_functional(sv, hull_basis, seed))
        f = trivialize(psi, window.hull())
        assert f.agrees_with(psi.g, window_basis) == [], seed
        report = residual_check(psi, f, window)
        assert report.passed, seed
        assert all(sector.passed for sector in report.sectors.values())


def test_residual_locates_perturbation(sv, small_window):
    """f(L_{1,0}) 加 1 后，残差恰好在括号含 L_{1,0} 的对上非零"""
    g = random_functional(sv, sv.window_basis(small_window.hull()), 8)
    psi = Coboundary(sv, g)
    f = trivialize(psi, small_window.hull())
    target = sv.L(1)
    perturbed = f.with_value(target, f.value(target) + 1)
    report = residual_check(psi, perturbed, small_window)
    expected = {
        (x, y): -sv.bracket_basis(x, y).coefficient(target)
        for x, y in window_pairs(sv.window_basis(small_window))
        if sv.bracket_basis(x, y).coefficient(target)
    }
    assert {v.args: v.residual for v in report.violations} == expected
    assert not report.sectors["GG"].passed


def test_residual_needs_functional_on_hull(sv, small_window):
    g = random_functional(sv, sv.window_basis(small_window.hull()), 2)
    psi = Coboundary(sv, g)
    f = trivialize(psi, small_window)
    with pytest.raises(UndefinedFunctionalError):
        residual_check(psi, f, small_window)
