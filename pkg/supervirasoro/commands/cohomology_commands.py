"""
上同调命令：cocycle-check、cocycle-trivialize
"""
from typing import Optional

from supervirasoro.cohomology.cocycle import is_cocycle
from supervirasoro.cohomology.trivialize import SECTORS, residual_check, trivialize
from supervirasoro.commands.base import Command, CommandOptions
from supervirasoro.config.session import Session
from supervirasoro.formats.files import decode_cocycle, located
from supervirasoro.tools.report_tools import Report, result_summary
from supervirasoro.utils.file_utils import JsonDocument


class CocycleCheckCommand(Command):
    name = "cocycle-check"
    needs_input = True

    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        algebra = session.algebra
        psi = decode_cocycle(doc, algebra, session.window)
        result = is_cocycle(psi, session.window, jobs=options.jobs)
        report = Report(command=self.name).add(result, algebra)
        report.details = {"cocycle": type(psi).__name__}
        return report


class CocycleTrivializeCommand(Command):
    """
    在窗口闭包上算出 f，再在窗口上逐扇区检查 ψ(x,y) = f([x,y])

    f 写进 details；残差非零即违例。
    """

    name = "cocycle-trivialize"
    needs_input = True

    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        algebra = session.algebra
        psi = decode_cocycle(doc, algebra, session.window)
        with located(doc):
            f = trivialize(psi, session.window.hull())
        residuals = residual_check(psi, f, session.window)

        report = Report(command=self.name)
        for sector in SECTORS:
            report.add(residuals.sectors[sector], algebra)
        f_values = {
            algebra.format_vector(b): str(f.value(b))
            for b in sorted(f.domain, key=lambda v: v.sort_key())
            if f.value(b)
        }
        report.details = {
            "f": f_values,
            "sectors": {s: result_summary(residuals.sectors[s]) for s in SECTORS},
        }
        return report
