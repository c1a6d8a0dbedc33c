"""
报告工具模块
"""

from supervirasoro.tools.report_tools import (
    EXIT_CODES,
    Report,
    format_summary,
    result_summary,
    save_report,
    violation_to_json,
)

__all__ = [
    "EXIT_CODES",
    "Report",
    "format_summary",
    "result_summary",
    "save_report",
    "violation_to_json",
]
