"""
上同调模块
"""

from supervirasoro.cohomology.cocycle import (
    Coboundary,
    CocycleSpec,
    CocycleSpecError,
    LinearFunctional,
    OutOfWindowError,
    TableCocycle,
    UndefinedFunctionalError,
    cocycle_eval,
    is_cocycle,
    svir_central_cocycle,
)
from supervirasoro.cohomology.trivialize import (
    SECTORS,
    ResidualReport,
    residual_check,
    sector_of,
    trivialize,
)

__all__ = [
    "Coboundary",
    "CocycleSpec",
    "CocycleSpecError",
    "LinearFunctional",
    "OutOfWindowError",
    "TableCocycle",
    "UndefinedFunctionalError",
    "cocycle_eval",
    "is_cocycle",
    "svir_central_cocycle",
    "SECTORS",
    "ResidualReport",
    "residual_check",
    "sector_of",
    "trivialize",
]
