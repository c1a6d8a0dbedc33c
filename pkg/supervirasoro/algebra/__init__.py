"""
代数模块：基向量、元素、窗口、括号与窗口检查
"""

from supervirasoro.algebra.basis import (
    BasisError,
    BasisVector,
    Kind,
    Parity,
    Variant,
    VariantError,
)
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.window import Window, WindowError
from supervirasoro.algebra.superalgebra import SuperAlgebra, super_sign
from supervirasoro.algebra.checks import (
    AxiomReport,
    CentralityResult,
    CheckResult,
    Violation,
    check_axioms,
    check_grading,
    check_jacobi,
    check_level_zero_slice,
    check_skew,
    is_central,
    window_center,
)
from supervirasoro.algebra.span import SpanReport, generate_span, span_generators

__all__ = [
    "BasisError",
    "BasisVector",
    "Kind",
    "Parity",
    "Variant",
    "VariantError",
    "Element",
    "Window",
    "WindowError",
    "SuperAlgebra",
    "super_sign",
    "AxiomReport",
    "CentralityResult",
    "CheckResult",
    "Violation",
    "check_axioms",
    "check_grading",
    "check_jacobi",
    "check_level_zero_slice",
    "check_skew",
    "is_central",
    "window_center",
    "SpanReport",
    "generate_span",
    "span_generators",
]
