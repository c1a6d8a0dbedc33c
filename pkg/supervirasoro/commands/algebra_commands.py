"""
代数检查命令：check-axioms、check-center、check-generators
"""
from typing import Optional

from supervirasoro.algebra.basis import Kind
from supervirasoro.algebra.checks import CheckResult, Violation, check_axioms, is_central, window_center
from supervirasoro.algebra.span import generate_span
from supervirasoro.commands.base import Command, CommandOptions
from supervirasoro.config.session import Session
from supervirasoro.formats.files import decode_element
from supervirasoro.formats.literals import element_to_json, window_to_json
from supervirasoro.tools.report_tools import Report, result_summary
from supervirasoro.utils.file_utils import JsonDocument


class CheckAxiomsCommand(Command):
    """超反对称、超 Jacobi、分次与第 0 层切片"""

    name = "check-axioms"

    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        settings = options.settings
        axioms = check_axioms(
            session.algebra,
            session.window,
            seed=session.seed,
            max_exhaustive_triples=settings.max_exhaustive_triples,
            random_triples=settings.random_triples,
            jobs=options.jobs,
        )
        report = Report(command=self.name)
        sections = {"skew": axioms.pairs, "jacobi": axioms.triples, "grading": axioms.grading}
        if axioms.slice is not None:
            sections["slice"] = axioms.slice
        for result in sections.values():
            report.add(result, session.algebra)
        report.details = {
            "variant": session.algebra.variant.value,
            "window": window_to_json(session.group, session.window),
            "basis_size": len(session.algebra.window_basis(session.window)),
            "triples": "sampled" if axioms.sampled else "exhaustive",
            "seed": session.seed,
            "sections": {k: result_summary(v) for k, v in sections.items()},
        }
        return report


class CheckCenterCommand(Command):
    """
    给了 --input 时检查该元素是否中心；否则计算窗口中心

    窗口中心除 C 的倍数外应为零。
    """

    name = "check-center"

    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        algebra = session.algebra
        report = Report(command=self.name)
        basis = algebra.window_basis(session.window)
        if doc is not None:
            z = decode_element(doc, algebra)
            outcome = is_central(algebra, z, session.window)
            result = CheckResult(checked=len(basis))
            if not outcome.central:
                result.violations.append(Violation("center", (outcome.witness,), outcome.value))
            report.add(result, algebra)
            report.details = {"mode": "element", "element": element_to_json(algebra, z), "central": outcome.central}
            return report

        center = window_center(algebra, session.window)
        result = CheckResult(checked=len(basis))
        for element in center:
            if any(b.kind is not Kind.C for b in element.support()):
                result.violations.append(Violation("center", element.support(), element))
        report.add(result, algebra)
        report.details = {
            "mode": "window",
            "center_dimension": len(center),
            "center": [element_to_json(algebra, e) for e in center],
        }
        return report


class CheckGeneratorsCommand(Command):
    """生成元闭包覆盖整个窗口"""

    name = "check-generators"

    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        algebra = session.algebra
        span = generate_span(algebra, session.window)
        result = CheckResult(checked=len(span.reached) + len(span.missing))
        for b in span.missing:
            result.violations.append(Violation("span", (b,), note="missing"))
        report = Report(command=self.name).add(result, algebra)
        report.details = {
            "generators": [algebra.format_vector(b) for b in span.generators],
            "reached": len(span.reached),
            "missing": [algebra.format_vector(b) for b in span.missing],
            "rank": span.rank,
            "rounds": span.rounds,
        }
        return report
