"""
检查依赖是否已安装，并对 supervirasoro 做一次最小的冒烟检查
"""
import sys
from importlib import import_module

RUNTIME = [
    ("langgraph", "langgraph"),
    ("pydantic", "pydantic"),
    ("pydantic_settings", "pydantic-settings"),
    ("dotenv", "python-dotenv"),
    ("sympy", "sympy"),
]

TESTING = [
    ("pytest", "pytest"),
    ("hypothesis", "hypothesis"),
]


def check_dependency(module_name: str, package_name: str) -> bool:
    """检查单个依赖"""
    try:
        module = import_module(module_name)
    except ImportError:
        print(f"❌ {package_name} (未安装)")
        return False
    version = getattr(module, "__version__", None)
    print(f"✅ {package_name}" + (f" {version}" if version else ""))
    return True


def smoke_check() -> bool:
    """在 Γ = Z, s = 1/2 上算 [G_{1/2}, G_{-1/2}] = 2L_{0,0}"""
    try:
        from fractions import Fraction

        from supervirasoro.algebra.basis import Variant
        from supervirasoro.algebra.superalgebra import SuperAlgebra
        from supervirasoro.field.quadratic import QuadraticField
        from supervirasoro.grading.index_group import IndexGroup
    except ImportError as exc:
        print(f"❌ supervirasoro 无法导入: {exc}")
        return False

    field = QuadraticField(2)
    group = IndexGroup.canonical(field, [field(1)], field(Fraction(1, 2)))
    algebra = SuperAlgebra(group, Variant.SV)
    half = Fraction(1, 2)
    value = algebra.bracket(algebra.vector(algebra.G(half)), algebra.vector(algebra.G(-half)))
    ok = value == algebra.vector(algebra.L(0), 2)
    print(("✅" if ok else "❌") + f" [G(1/2), G(-1/2)] = {algebra.format_element(value)}")
    return ok


def main() -> int:
    """主函数"""
    print("运行依赖:")
    runtime_ok = all([check_dependency(m, p) for m, p in RUNTIME])
    print("\n测试依赖:")
    testing_ok = all([check_dependency(m, p) for m, p in TESTING])

    print("\n" + "=" * 50)
    if not runtime_ok:
        print("❌ 部分运行依赖未安装")
        print("\n请先安装依赖：")
        print("  pip install -r requirements.txt")
        return 1

    print("\n冒烟检查:")
    if not smoke_check():
        return 1
    if testing_ok:
        print("\n可以运行测试：")
        print('  pytest tests/ -m "not slow"')
    return 0


if __name__ == "__main__":
    sys.exit(main())
