"""
配置管理模块
"""

from supervirasoro.config.settings import Settings, get_settings, reset_settings
from supervirasoro.config.session import Session, SessionConfig, build_session

__all__ = [
    "Settings",
    "get_settings",
    "reset_settings",
    "Session",
    "SessionConfig",
    "build_session",
]
