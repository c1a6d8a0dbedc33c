"""
报告生成工具
"""
import os
from datetime import datetime
from typing import Any, Dict, List, Literal, Optional, Sequence

from pydantic import BaseModel, Field

from supervirasoro.algebra.checks import CheckResult, Violation
from supervirasoro.algebra.element import Element
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.formats.literals import element_to_json
from supervirasoro.utils.file_utils import write_json


Status = Literal["pass", "fail", "error"]

EXIT_CODES: Dict[str, int] = {"pass": 0, "fail": 1, "error": 2}


class Report(BaseModel):
    """
    一次命令运行的结果

    status 为 pass 当且仅当 violations 为空且没有出错。
    """

    command: str
    status: Status = "pass"
    checked: int = 0
    skipped: int = 0
    violations: List[Dict[str, Any]] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)
    error: Optional[str] = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def add(self, result: CheckResult, algebra: SuperAlgebra) -> "Report":
        """并入一个检查结果"""
        self.checked += result.checked
        self.skipped += result.skipped
        self.violations.extend(violation_to_json(algebra, v) for v in result.violations)
        return self

    def finalize(self) -> "Report":
        if self.error is not None:
            self.status = "error"
        elif self.violations:
            self.status = "fail"
        else:
            self.status = "pass"
        return self

    @classmethod
    def failure(cls, command: str, message: str, **details: Any) -> "Report":
        return cls(command=command, status="error", error=message, details=dict(details))


def violation_to_json(algebra: SuperAlgebra, v: Violation) -> Dict[str, Any]:
    entry: Dict[str, Any] = {
        "check": v.check,
        "args": [algebra.format_vector(b) for b in v.args],
    }
    if isinstance(v.residual, Element):
        entry["residual"] = element_to_json(algebra, v.residual)
    elif v.residual is not None:
        entry["residual"] = str(v.residual)
    if v.note is not None:
        entry["note"] = v.note
    return entry


def result_summary(result: CheckResult) -> Dict[str, int]:
    return {
        "checked": result.checked,
        "skipped": result.skipped,
        "violations": len(result.violations),
    }


def save_report(report: Report, output_path: Optional[str] = None, reports_dir: str = "./outputs/reports") -> str:
    """
    保存报告到文件，键序稳定，同一输入逐字节相同

    Args:
        report: 报告
        output_path: 输出路径，如果为 None 则自动生成
        reports_dir: 自动生成路径时使用的目录

    Returns:
        保存的文件路径
    """
    if output_path is None:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        output_path = os.path.join(reports_dir, f"{report.command}_{timestamp}.json")

    return write_json(output_path, report.model_dump())


def format_summary(report: Report, max_violations: int = 5) -> str:
    """纯文本摘要"""
    lines = [
        f"命令: {report.command}",
        f"状态: {report.status}",
        f"检查: {report.checked}  跳过: {report.skipped}  违例: {len(report.violations)}",
    ]
    if report.error:
        lines.append(f"错误: {report.error}")
    shown: Sequence[Dict[str, Any]] = report.violations[:max_violations]
    for v in shown:
        residual = v.get("residual", "")
        if isinstance(residual, dict):
            residual = " + ".join(f"({t['coeff']})*{t['basis']}" for t in residual.get("terms", []))
        lines.append(f"  - {v['check']} {', '.join(v['args'])}: {residual}")
    if len(report.violations) > max_violations:
        lines.append(f"  ... 另有 {len(report.violations) - max_violations} 个违例")
    return "\n".join(lines)
