"""
LangGraph 图定义模块
"""

from supervirasoro.graph.verification_graph import RunState, VerificationGraph, load_session_config

__all__ = ["RunState", "VerificationGraph", "load_session_config"]
