"""
指标群模块
"""

from supervirasoro.grading.lattice import Lattice, hermite_normal_form
from supervirasoro.grading.index_group import (
    Coset,
    GroupElement,
    GroupValidationError,
    IndexGroup,
    ScalingCheck,
)
from supervirasoro.grading.functionals import Character, HomZ

__all__ = [
    "Lattice",
    "hermite_normal_form",
    "Coset",
    "GroupElement",
    "GroupValidationError",
    "IndexGroup",
    "ScalingCheck",
    "Character",
    "HomZ",
]
