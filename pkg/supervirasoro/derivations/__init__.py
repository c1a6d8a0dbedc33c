"""
导子模块
"""

from supervirasoro.derivations.table import DerivationTable, DerivationTableError
from supervirasoro.derivations.operations import (
    adjust_inner,
    d_phi,
    decompose,
    degree_component,
    inner_table,
    is_zero_on,
    leibniz_check,
    leibniz_residual,
    occurring_shifts,
    phi_table,
    subtract_inner,
    sum_tables,
)

__all__ = [
    "DerivationTable",
    "DerivationTableError",
    "adjust_inner",
    "d_phi",
    "decompose",
    "degree_component",
    "inner_table",
    "is_zero_on",
    "leibniz_check",
    "leibniz_residual",
    "occurring_shifts",
    "phi_table",
    "subtract_inner",
    "sum_tables",
]
