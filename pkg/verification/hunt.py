"""
Table hunt: numerical adjudication of the Bierens de Haan table 129 entries
and the constant of the log-ratio remark.
"""

from typing import Optional

from logkernel.catalog import build_registry, lhs_value, rhs_value
from logkernel.config import NumericDefaults
from logkernel.logging_config import get_logger
from logkernel.models.catalog import Identity
from logkernel.models.quadrature import QuadConfig
from logkernel.models.series import SumConfig
from logkernel.models.verification import HuntConvention, HuntEntry, HuntPoint, HuntReport, RemarkFit
from verification.harness import EVALUATION_ERRORS, REMARK_ID, error_note, error_verdict, judge, suite_points


logger = get_logger("verify.hunt")

APPENDIX_PREFIX = "appendix-"
CLOSED_FORM_KEY = "closed form"
REMARK_CLAIMED_C = 2.0


def _selected(rhs_convention: Optional[str], convention: HuntConvention) -> bool:
    return rhs_convention is None or convention == "both" or rhs_convention == convention


def _hunt_point(
    identity: Identity,
    params: dict,
    convention: HuntConvention,
    tol: float,
    qcfg: QuadConfig,
    scfg: Optional[SumConfig],
) -> HuntPoint:
    point = HuntPoint(params=params)
    try:
        lhs = lhs_value(identity, params, qcfg)
    except EVALUATION_ERRORS as e:
        point.notes.append(f"lhs: {error_note(e)}")
        lhs = None
    if lhs is not None:
        point.lhs = lhs.value
        point.lhs_err = lhs.error_estimate
        point.regularization = lhs.regularization
        if not lhs.converged:
            point.notes.append("lhs not converged")

    for index, rhs_expr in enumerate(identity.rhs):
        if not _selected(rhs_expr.convention, convention):
            continue
        key = rhs_expr.convention or CLOSED_FORM_KEY
        try:
            rhs = rhs_value(identity, index, params, scfg)
        except EVALUATION_ERRORS as e:
            point.claimed[key] = None
            point.claimed_err[key] = None
            point.verdicts[key] = error_verdict(e)
            point.notes.append(f"{key}: {error_note(e)}")
            continue
        point.claimed[key] = rhs.value
        point.claimed_err[key] = rhs.error_estimate
        point.notes.extend(f"{key}: {note}" for note in rhs.notes)
        if lhs is None:
            point.verdicts[key] = "inconclusive"
        else:
            point.verdicts[key] = judge(lhs.value, lhs.error_estimate, rhs.value, rhs.error_estimate, tol)
    return point


def _summary(points: list[HuntPoint]) -> str:
    keys: list[str] = []
    for point in points:
        keys.extend(k for k in point.verdicts if k not in keys)
    parts = []
    for key in keys:
        verdicts = [p.verdicts[key] for p in points if key in p.verdicts]
        passed = sum(v == "pass" for v in verdicts)
        if passed == len(verdicts):
            parts.append(f"{key}: pass")
        else:
            failed = sum(v == "fail" for v in verdicts)
            parts.append(f"{key}: {passed}/{len(verdicts)} pass, {failed} fail")
    return "; ".join(parts)


def hunt_entry(
    identity: Identity,
    convention: HuntConvention = "both",
    tol: float = NumericDefaults.TOL,
    qcfg: Optional[QuadConfig] = None,
    scfg: Optional[SumConfig] = None,
) -> HuntEntry:
    """Adjudicate one table entry over its parameter points."""
    qcfg = qcfg or QuadConfig()
    points = [
        _hunt_point(identity, params, convention, tol, qcfg, scfg)
        for params in suite_points(identity, NumericDefaults.A_GRID)
    ]
    entry = HuntEntry(
        entry=int(identity.id[len(APPENDIX_PREFIX):]),
        identity_id=identity.id,
        statement=identity.title,
        uses_odd_bernoulli=any(rhs.convention is not None for rhs in identity.rhs),
        points=points,
    )
    entry.summary = _summary(points)
    return entry


def fit_remark(qcfg: Optional[QuadConfig] = None) -> list[RemarkFit]:
    """Measured log-ratio integrals over both half-lines and the fitted c = n * value."""
    qcfg = qcfg or QuadConfig()
    identity = next(i for i in build_registry() if i.id == REMARK_ID)
    fits = []
    for params in suite_points(identity, ()):
        n = int(params["n"])
        for index in range(len(identity.lhs)):
            fit = RemarkFit(n=n, interval=identity.lhs_label(index)[3:], claimed_c=REMARK_CLAIMED_C)
            try:
                result = lhs_value(identity, params, qcfg, index)
            except EVALUATION_ERRORS as e:
                logger.warning(f"remark n={n}: {error_note(e)}")
            else:
                fit.lhs = result.value
                fit.lhs_err = result.error_estimate
                fit.fitted_c = n * result.value
            fits.append(fit)
    return fits


def hunt_table129(
    convention: HuntConvention = "both",
    tol: float = NumericDefaults.TOL,
    qcfg: Optional[QuadConfig] = None,
    scfg: Optional[SumConfig] = None,
) -> HuntReport:
    """
    Adjudicate every table entry.

    Entries whose right-hand side carries odd-index Bernoulli symbols are
    evaluated under the selected reading(s): ``modern`` takes B_(2n+1)
    literally, ``archaic`` reads it as |B_(2n)|. The report always carries the
    measured left-hand side next to each verdict.
    """
    report = HuntReport(convention=convention, tol=tol)
    for identity in build_registry():
        if identity.id.startswith(APPENDIX_PREFIX):
            entry = hunt_entry(identity, convention, tol, qcfg, scfg)
            logger.info(
                f"Entry {entry.entry}: {entry.summary}",
                extra={"component": "hunt", "identity_id": identity.id},
            )
            report.entries.append(entry)
    report.remark = fit_remark(qcfg)
    return report
