"""
广义 super-Virasoro 李超代数 SV[Γ,s]（非有限分次）的精确验证工具
二次域上的精确算术、括号公理、导子、自同构与二阶上同调的窗口化检查
"""

__version__ = "0.1.0"

# 延迟导入，避免循环依赖
def __getattr__(name):
    if name == "SessionVerifier":
        from supervirasoro.main import SessionVerifier
        return SessionVerifier
    raise AttributeError(f"module '{__name__}' has no attribute '{name}'")

__all__ = ["SessionVerifier"]
