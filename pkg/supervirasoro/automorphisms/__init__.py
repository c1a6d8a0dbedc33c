"""
自同构模块
"""

from supervirasoro.automorphisms.params import AutomorphismError, AutParams
from supervirasoro.automorphisms.operations import (
    ValidationResult,
    aut_apply,
    aut_apply_vector,
    aut_check_hom,
    aut_compose,
    aut_inverse,
    aut_validate,
    coherence_check,
    params_equal,
)

__all__ = [
    "AutomorphismError",
    "AutParams",
    "ValidationResult",
    "aut_apply",
    "aut_apply_vector",
    "aut_check_hom",
    "aut_compose",
    "aut_inverse",
    "aut_validate",
    "coherence_check",
    "params_equal",
]
