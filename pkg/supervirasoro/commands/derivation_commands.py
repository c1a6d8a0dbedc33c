"""
导子命令：derivation-check、derivation-reduce
"""
from typing import Optional

from supervirasoro.algebra.basis import BasisVector
from supervirasoro.algebra.checks import CheckResult, Violation
from supervirasoro.commands.base import Command, CommandOptions
from supervirasoro.config.session import Session
from supervirasoro.derivations.operations import (
    adjust_inner,
    decompose,
    leibniz_check,
    subtract_inner,
)
from supervirasoro.formats.files import decode_derivation, decode_element, is_element_document, located
from supervirasoro.formats.literals import element_to_json
from supervirasoro.tools.report_tools import Report
from supervirasoro.utils.file_utils import JsonDocument


class DerivationCheckCommand(Command):
    name = "derivation-check"
    needs_input = True

    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        algebra = session.algebra
        table = decode_derivation(doc, algebra, session.window)
        result = leibniz_check(table, session.window, jobs=options.jobs)
        report = Report(command=self.name).add(result, algebra)
        report.details = {
            "parity": table.parity.name.lower(),
            "degree": None if table.degree is None else session.group.format(table.degree),
            "domain_size": len(table.images),
        }
        return report


class DerivationReduceCommand(Command):
    """
    输入为元素 v 时求 y 使 [y, L_{0,0}] = v；
    输入为导子表 D 时取 v = D(L_{0,0})，再把 D 换成 D − ad_y，验证它在 L_{0,0} 上为零
    """

    name = "derivation-reduce"
    needs_input = True

    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        algebra = session.algebra
        l00 = BasisVector.L(session.group.zero(), 0)
        report = Report(command=self.name)
        table = None
        if is_element_document(doc):
            v = decode_element(doc, algebra)
        else:
            table = decode_derivation(doc, algebra, session.window)
            with located(doc, "L(0,0)"):
                v = table.apply_vector(l00)

        with located(doc):
            y = adjust_inner(algebra, v)
        result = CheckResult(checked=1)
        bracket = algebra.bracket(y, algebra.vector(l00))
        if bracket != v:
            result.violations.append(Violation("adjust-inner", (l00,), bracket - v))
        details = {
            "v": element_to_json(algebra, v),
            "y": element_to_json(algebra, y),
        }

        if table is not None:
            with located(doc, "images"):
                reduced = subtract_inner(table, y)
            result.checked += 1
            remainder = reduced.apply_vector(l00)
            if remainder:
                result.violations.append(Violation("reduced-L00", (l00,), remainder))
            components = decompose(reduced)
            details["reduced_nonzero"] = [
                {"basis": algebra.format_vector(b), "image": element_to_json(algebra, image)}
                for b, image in sorted(reduced.nonzero().items(), key=lambda t: t[0].sort_key())
            ]
            details["reduced_degrees"] = [session.group.format(g) for g in components]

        report.add(result, algebra)
        report.details = details
        return report
