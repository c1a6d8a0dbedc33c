"""
测试共用的 fixture
"""
from fractions import Fraction

import pytest

from supervirasoro.algebra.basis import Variant
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.config.settings import reset_settings
from supervirasoro.field.quadratic import QuadraticField
from supervirasoro.grading.index_group import IndexGroup


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 窗口较大的全量检查")


@pytest.fixture
def field():
    """Q(√2)"""
    return QuadraticField(2)


@pytest.fixture
def group_z(field):
    """Γ = Z, s = 1/2，Ω = (1/2)Z"""
    return IndexGroup.canonical(field, [field(1)], field(Fraction(1, 2)))


@pytest.fixture
def group_z_s0(field):
    """Γ = Ω = Z, s = 0"""
    return IndexGroup.canonical(field, [field(1)], field(0))


@pytest.fixture
def group_sqrt2(field):
    """Γ = Z + √2Z, s = 1/2，Ω = (1/2)Z + √2Z"""
    return IndexGroup.canonical(field, [field(1), field.sqrt_d], field(Fraction(1, 2)))


@pytest.fixture
def group_sqrt2_s0(field):
    """Γ = Ω = Z[√2], s = 0"""
    return IndexGroup.canonical(field, [field(1), field.sqrt_d], field(0))


@pytest.fixture
def sv(group_z):
    return SuperAlgebra(group_z, Variant.SV)


@pytest.fixture
def sv_s0(group_z_s0):
    return SuperAlgebra(group_z_s0, Variant.SV)


@pytest.fixture
def svir(group_z):
    return SuperAlgebra(group_z, Variant.SVIR)


@pytest.fixture
def svir0(group_z):
    return SuperAlgebra(group_z, Variant.SVIR0)


@pytest.fixture
def witt(group_z):
    return SuperAlgebra(group_z, Variant.W)


@pytest.fixture
def small_window():
    """Ω 坐标在 [−2, 2]（次数 −1 … 1，步长 1/2），i_max = 2"""
    return Window.from_bound(1, 2, 2)


@pytest.fixture
def wide_window():
    """Ω 坐标在 [−4, 4]（次数 −2 … 2），只用第 0 层的变体"""
    return Window.from_bound(1, 4, 0)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch, tmp_path):
    """每个测试重新读取配置，报告默认写到临时目录"""
    monkeypatch.setenv("SVIR_REPORTS_DIR", str(tmp_path / "reports"))
    reset_settings()
    yield
    reset_settings()
