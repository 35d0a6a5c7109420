"""
Evaluation of registry identities: left-hand sides by quadrature (or lemma
routine) and right-hand-side variants by closed form or series.
"""

import logging
import math
from typing import Optional, Union

from logkernel.catalog.lemmas import run_routine
from logkernel.catalog.registry import get_identity
from logkernel.config import NumericDefaults
from logkernel.exceptions import ParameterDomainError, VariantIndexError
from logkernel.logging_config import get_logger, log_series_event
from logkernel.models.catalog import (
    ClosedForm,
    ComputedLhs,
    Identity,
    IntegrandSpec,
    RationalConstant,
    SeriesExpr,
)
from logkernel.models.quadrature import QuadConfig, QuadResult
from logkernel.models.series import ParamValue, SeriesSpec, SumConfig, SumResult
from logkernel.quad.integrals import integrate_spec
from logkernel.series.engines import sum_series
from logkernel.series.terms import term_registry
from logkernel.utils.numeric_utils import EPS


# Relative accuracy assumed for closed forms evaluated through specfun
CLOSED_FORM_REL_ERR = 1e-14

IdentityRef = Union[str, Identity]

logger = get_logger("catalog")


def _resolve(identity: IdentityRef) -> Identity:
    return identity if isinstance(identity, Identity) else get_identity(identity)


def check_params(identity: Identity, params: dict[str, ParamValue]) -> None:
    """
    Raises:
        ParameterDomainError: a declared parameter is missing or out of domain
    """
    missing = [name for name in identity.params if name not in params]
    if missing:
        raise ParameterDomainError(identity.id, params, f"missing parameters {missing}")
    reason = identity.param_domain.violation(params)
    if reason:
        raise ParameterDomainError(identity.id, params, reason)


def _closed_form(expr: ClosedForm, params: dict[str, ParamValue]) -> SumResult:
    value = expr.expr.eval(params)
    return SumResult(
        value=value,
        error_estimate=CLOSED_FORM_REL_ERR * max(1.0, abs(value)),
        terms_used=0,
        converged=math.isfinite(value),
        mode_used="closed_form",
    )


def _sum_spec(spec: SeriesSpec, params: dict[str, ParamValue], scfg: Optional[SumConfig]) -> SumResult:
    term = term_registry.get(spec.term_id)
    # Identity parameters fill term parameters the series does not fix itself
    bound = {name: params[name] for name in term.params if name in params and name not in spec.params}
    update: dict = {"params": {**spec.params, **bound}}
    if scfg is not None:
        if scfg.tol is not None:
            update["tol"] = scfg.tol
        if scfg.max_terms is not None:
            update["max_terms"] = min(spec.max_terms, scfg.max_terms)
    return sum_series(spec.model_copy(update=update))


def _series_value(expr: SeriesExpr, params: dict[str, ParamValue], scfg: Optional[SumConfig]) -> SumResult:
    spec = expr.series
    summed = _sum_spec(spec, params, scfg)
    if not summed.converged and expr.fallback_mode is not None:
        fallback_spec = spec.model_copy(
            update={"mode": expr.fallback_mode, "max_terms": NumericDefaults.max_terms_for_mode(expr.fallback_mode)}
        )
        retried = _sum_spec(fallback_spec, params, scfg)
        log_series_event(
            logger, spec.mode, spec.term_id, f"fallback_{expr.fallback_mode}",
            data={"error_estimate": summed.error_estimate, "fallback_error": retried.error_estimate},
            level=logging.WARNING,
        )
        if retried.error_estimate < summed.error_estimate:
            note = f"fallback_{expr.fallback_mode}: {spec.mode} did not converge"
            summed = retried.model_copy(update={"notes": retried.notes + (note,)})

    scale = expr.scale.eval(params)
    offset = expr.offset.eval(params)
    value = math.fsum([offset, scale * summed.value])
    error = abs(scale) * summed.error_estimate + CLOSED_FORM_REL_ERR * max(1.0, abs(offset))
    notes = tuple(summed.notes)
    return SumResult(
        value=value,
        error_estimate=error,
        terms_used=summed.terms_used,
        converged=summed.converged,
        mode_used=summed.mode_used,
        notes=notes,
    )


def evaluate_value(
    expr: Union[ClosedForm, SeriesExpr, RationalConstant],
    params: dict[str, ParamValue],
    scfg: Optional[SumConfig] = None,
) -> SumResult:
    """Evaluate one value expression at a parameter point."""
    if isinstance(expr, RationalConstant):
        value = expr.value
        return SumResult(
            value=value,
            error_estimate=EPS * abs(value),
            terms_used=0,
            converged=True,
            mode_used="rational",
        )
    if isinstance(expr, ClosedForm):
        return _closed_form(expr, params)
    return _series_value(expr, params, scfg)


def _as_quad(result: SumResult) -> QuadResult:
    return QuadResult(
        value=result.value,
        error_estimate=result.error_estimate,
        subdivisions_used=result.terms_used,
        converged=result.converged,
    )


def lhs_value(
    identity: IdentityRef,
    params: Optional[dict[str, ParamValue]] = None,
    cfg: Optional[QuadConfig] = None,
    index: int = 0,
) -> QuadResult:
    """
    Left-hand side ``index`` of an identity at a parameter point.

    Integrands are bound to the parameters and routed to the quadrature for
    their family and interval; lemma routines and series left-hand sides are
    evaluated directly.

    Raises:
        IdentityNotFoundError: unknown id
        ParameterDomainError: parameters outside the declared domain
    """
    identity = _resolve(identity)
    params = dict(params or {})
    cfg = cfg or QuadConfig()
    check_params(identity, params)
    lhs = identity.lhs[index]
    if isinstance(lhs, IntegrandSpec):
        return integrate_spec(lhs.bind(params), cfg)
    if isinstance(lhs, ComputedLhs):
        return run_routine(lhs.routine, {**params, **lhs.fixed}, cfg)
    return _as_quad(evaluate_value(lhs, params))


def rhs_value(
    identity: IdentityRef,
    variant: int = 0,
    params: Optional[dict[str, ParamValue]] = None,
    scfg: Optional[SumConfig] = None,
) -> SumResult:
    """
    Right-hand-side variant ``variant`` of an identity at a parameter point.

    Raises:
        IdentityNotFoundError: unknown id
        VariantIndexError: variant out of range
        ParameterDomainError: parameters outside the declared domain
    """
    identity = _resolve(identity)
    params = dict(params or {})
    if not 0 <= variant < len(identity.rhs):
        raise VariantIndexError(identity.id, variant, len(identity.rhs))
    check_params(identity, params)
    return evaluate_value(identity.rhs[variant], params, scfg)
