"""
自同构命令：aut-check、aut-compose
"""
from typing import Optional

from supervirasoro.algebra.checks import Violation
from supervirasoro.automorphisms.operations import (
    aut_check_hom,
    aut_compose,
    aut_inverse,
    aut_validate,
    coherence_check,
    params_equal,
)
from supervirasoro.automorphisms.params import AutParams
from supervirasoro.commands.base import Command, CommandOptions
from supervirasoro.config.session import Session
from supervirasoro.formats.files import decode_aut_pair, decode_aut_params
from supervirasoro.formats.literals import basis_values_to_json
from supervirasoro.tools.report_tools import Report, result_summary
from supervirasoro.utils.file_utils import JsonDocument


def params_to_json(session: Session, p: AutParams) -> dict:
    return {
        "tau": basis_values_to_json(session.group, p.tau.values),
        "c": str(p.c),
        "r": None if p.r is None else str(p.r),
        "sign": p.sign,
    }


def _invalid(name: str, reasons, witness) -> Report:
    return Report.failure(
        name,
        "; ".join(reasons),
        reasons=list(reasons),
        witness=None if witness is None else str(witness),
    )


class AutCheckCommand(Command):
    """参数验证失败时报 error（退出码 2），否则检查同态性与逆元"""

    name = "aut-check"
    needs_input = True

    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        algebra = session.algebra
        p = decode_aut_params(doc, algebra)
        validation = aut_validate(algebra, p)
        if not validation.ok:
            return _invalid(self.name, validation.reasons, validation.witness)

        hom = aut_check_hom(algebra, p, session.window, jobs=options.jobs)
        inverse = aut_inverse(algebra, p)
        roundtrip = coherence_check(algebra, p, inverse, session.window)
        # p∘p⁻¹ 的参数应化为恒等参数
        identity = AutParams.identity(session.group)
        if not params_equal(aut_compose(algebra, p, inverse), identity):
            roundtrip.violations.append(Violation("inverse", (), None, "compose(p, p⁻¹) ≠ identity"))

        report = Report(command=self.name).add(hom, algebra).add(roundtrip, algebra)
        report.details = {
            "params": params_to_json(session, p),
            "inverse": params_to_json(session, inverse),
            "sections": {"homomorphism": result_summary(hom), "inverse": result_summary(roundtrip)},
        }
        return report


class AutComposeCommand(Command):
    """输出复合参数，并按定义逐向量验证 φ₁∘φ₂"""

    name = "aut-compose"
    needs_input = True

    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        algebra = session.algebra
        p1, p2 = decode_aut_pair(doc, algebra)
        reasons = []
        for label, p in (("p1", p1), ("p2", p2)):
            validation = aut_validate(algebra, p)
            reasons.extend(f"{label}: {r}" for r in validation.reasons)
        if reasons:
            return _invalid(self.name, reasons, None)

        composed = aut_compose(algebra, p1, p2)
        coherence = coherence_check(algebra, p1, p2, session.window, composed)
        hom = aut_check_hom(algebra, composed, session.window, jobs=options.jobs)
        report = Report(command=self.name).add(coherence, algebra).add(hom, algebra)
        report.details = {
            "composed": params_to_json(session, composed),
            "sections": {"coherence": result_summary(coherence), "homomorphism": result_summary(hom)},
        }
        return report
