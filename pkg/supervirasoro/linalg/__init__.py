"""
精确稀疏线性代数
"""

from supervirasoro.linalg.sparse import RowSpace, ScalarBridge, nullspace

__all__ = ["RowSpace", "ScalarBridge", "nullspace"]
