"""
Verification Harness

Evaluates every left-hand side of an identity against every right-hand-side
variant, turns each comparison into a VerificationResult and runs whole
suites over parameter grids.
"""

import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence, Union

from logkernel.catalog import build_registry, get_identity, lhs_value, list_identities, rhs_value
from logkernel.catalog.evaluate import check_params
from logkernel.config import NumericDefaults, get_settings
from logkernel.exceptions import BernoulliOverflowError, IdentityNotFoundError, LogKernelError
from logkernel.logging_config import create_identity_logger, get_logger, log_verify_event
from logkernel.models.catalog import ComputedLhs, Identity, IntegrandSpec, LhsSpec, SeriesExpr
from logkernel.models.quadrature import QuadConfig, QuadResult
from logkernel.models.series import ParamValue, SumConfig, SumResult
from logkernel.models.verification import VerificationResult, Verdict


logger = get_logger("verify")

# Identity whose right-hand side claims c/n; its notes report the fitted c
REMARK_ID = "remark-n"

# Failures during evaluation that become inconclusive rows instead of aborting
EVALUATION_ERRORS = (LogKernelError, ArithmeticError, ValueError)

Outcome = Union[QuadResult, SumResult, Exception]


# ===========================================
# Verdicts
# ===========================================


def judge(lhs: float, lhs_err: float, rhs: float, rhs_err: float, tol: float) -> Verdict:
    """
    Verdict for one comparison.

    inconclusive when the combined error estimate exceeds tol (or a value is
    not finite); otherwise pass iff |lhs - rhs| <= max(tol, 3 * combined).
    """
    combined = lhs_err + rhs_err
    if not all(math.isfinite(v) for v in (lhs, rhs, combined)):
        return "inconclusive"
    if combined > tol:
        return "inconclusive"
    return "pass" if abs(lhs - rhs) <= max(tol, 3.0 * combined) else "fail"


def params_key(params: dict[str, ParamValue]) -> tuple:
    return tuple((name, float(value)) for name, value in sorted(params.items()))


def format_params(params: dict[str, ParamValue]) -> str:
    """``a=0.5;b=1;`` with shortest round-trip numbers."""
    return "".join(f"{name}={value!r};" for name, value in sorted(params.items()))


def error_verdict(exc: Exception) -> Verdict:
    return "unsupported_convention" if isinstance(exc, BernoulliOverflowError) else "inconclusive"


def error_note(exc: Exception) -> str:
    message = exc.message if isinstance(exc, LogKernelError) else str(exc)
    return f"{type(exc).__name__}: {message}"


def _lhs_note(spec: LhsSpec, result: QuadResult) -> str:
    """Method that produced the left-hand side: quad, routine[name], series[mode] or closed."""
    if isinstance(spec, IntegrandSpec):
        note = "lhs=quad" if result.regularization == "none" else f"lhs=quad[{result.regularization}]"
    elif isinstance(spec, ComputedLhs):
        note = f"lhs=routine[{spec.routine}]"
    elif isinstance(spec, SeriesExpr):
        note = f"lhs=series[{spec.series.mode}]"
    else:
        note = "lhs=closed"
    if not result.converged:
        note += " (not converged)"
    return note


def _rhs_note(result: SumResult) -> str:
    note = f"rhs={result.mode_used}"
    if not result.converged:
        note += " (not converged)"
    return note


# ===========================================
# Single identity
# ===========================================


def _pairs(identity: Identity) -> list[tuple[int, int]]:
    """LHS 0 against every RHS, then every extra LHS against RHS 0."""
    pairs = [(0, j) for j in range(len(identity.rhs))]
    pairs += [(i, 0) for i in range(1, len(identity.lhs))]
    return pairs


def _timed(fn, *args) -> tuple[Outcome, float]:
    started = time.perf_counter()
    try:
        outcome: Outcome = fn(*args)
    except EVALUATION_ERRORS as e:
        outcome = e
    return outcome, (time.perf_counter() - started) * 1000.0


def _compare(
    identity: Identity,
    params: dict[str, ParamValue],
    variant: str,
    lhs_spec: LhsSpec,
    lhs: Outcome,
    rhs: Outcome,
    tol: float,
    elapsed_ms: int,
) -> VerificationResult:
    notes = [variant]
    if isinstance(lhs, Exception) or isinstance(rhs, Exception):
        failed = lhs if isinstance(lhs, Exception) else rhs
        notes.append(error_note(failed))
        return VerificationResult(
            identity_id=identity.id,
            params=params,
            variant=variant,
            lhs=None if isinstance(lhs, Exception) else lhs.value,
            lhs_err=None if isinstance(lhs, Exception) else lhs.error_estimate,
            rhs=None if isinstance(rhs, Exception) else rhs.value,
            rhs_err=None if isinstance(rhs, Exception) else rhs.error_estimate,
            tol=tol,
            verdict=error_verdict(failed),
            mode_notes="; ".join(notes),
            elapsed_ms=elapsed_ms,
        )

    abs_diff = abs(lhs.value - rhs.value)
    rel_diff = abs_diff / abs(rhs.value) if rhs.value != 0 else None
    verdict = judge(lhs.value, lhs.error_estimate, rhs.value, rhs.error_estimate, tol)

    notes += [_lhs_note(lhs_spec, lhs), _rhs_note(rhs)]
    notes.extend(rhs.notes)
    if identity.id == REMARK_ID and "n" in params:
        notes.append(f"fitted c={params['n'] * lhs.value:.12g}")
    return VerificationResult(
        identity_id=identity.id,
        params=params,
        variant=variant,
        lhs=lhs.value,
        lhs_err=lhs.error_estimate,
        rhs=rhs.value,
        rhs_err=rhs.error_estimate,
        abs_diff=abs_diff,
        rel_diff=rel_diff,
        tol=tol,
        verdict=verdict,
        mode_notes="; ".join(notes),
        elapsed_ms=elapsed_ms,
    )


def verify_identity(
    identity_id: str,
    params: Optional[dict[str, ParamValue]] = None,
    qcfg: Optional[QuadConfig] = None,
    scfg: Optional[SumConfig] = None,
    tol: float = NumericDefaults.TOL,
    timing: bool = False,
) -> list[VerificationResult]:
    """
    Check one identity at one parameter point.

    Each left-hand side and each right-hand-side variant is evaluated once;
    one VerificationResult is produced per (lhs, rhs) pairing. Evaluation
    failures become inconclusive (or unsupported_convention) rows.

    Args:
        identity_id: Registry id
        params: Parameter point
        qcfg: Quadrature configuration
        scfg: Series overrides
        tol: Verdict tolerance
        timing: Record wall time in elapsed_ms (0 otherwise)

    Returns:
        Results in pairing order

    Raises:
        IdentityNotFoundError: unknown id
        ParameterDomainError: params outside the identity's domain
    """
    identity = get_identity(identity_id)
    params = dict(params or {})
    qcfg = qcfg or QuadConfig()
    check_params(identity, params)
    ctx = create_identity_logger(logger, identity.id, params)

    lhs_cache: dict[int, tuple[Outcome, float]] = {}
    rhs_cache: dict[int, tuple[Outcome, float]] = {}
    results = []
    for i, j in _pairs(identity):
        if i not in lhs_cache:
            lhs_cache[i] = _timed(lhs_value, identity, params, qcfg, i)
        if j not in rhs_cache:
            rhs_cache[j] = _timed(rhs_value, identity, j, params, scfg)
        lhs, lhs_ms = lhs_cache[i]
        rhs, rhs_ms = rhs_cache[j]
        variant = f"{identity.lhs_label(i)} vs {identity.rhs[j].label}"
        elapsed = int(round(lhs_ms + rhs_ms)) if timing else 0

        result = _compare(identity, params, variant, identity.lhs[i], lhs, rhs, tol, elapsed)
        if isinstance(lhs, Exception) or isinstance(rhs, Exception):
            ctx.debug(f"{variant}: {result.mode_notes}")
        log_verify_event(
            logger,
            identity.id,
            result.verdict,
            params=params,
            error=result.mode_notes if result.verdict != "pass" else None,
            duration_ms=elapsed if timing else None,
        )
        results.append(result)
    return results


# ===========================================
# Suites
# ===========================================


def select_ids(patterns: Sequence[str]) -> list[str]:
    """
    Expand id patterns in registry order.

    A pattern is an exact id, a range ``first..last`` of exact ids, or a
    prefix such as ``appendix`` or ``main-0``.

    Raises:
        IdentityNotFoundError: a pattern matches nothing
    """
    ordered = list_identities()
    chosen: set[str] = set()
    for pattern in patterns:
        pattern = pattern.strip()
        if not pattern:
            continue
        if ".." in pattern:
            first, last = (part.strip() for part in pattern.split("..", 1))
            for endpoint in (first, last):
                if endpoint not in ordered:
                    raise IdentityNotFoundError(endpoint, ordered)
            lo, hi = sorted((ordered.index(first), ordered.index(last)))
            chosen.update(ordered[lo : hi + 1])
        elif pattern in ordered:
            chosen.add(pattern)
        else:
            matches = [identity_id for identity_id in ordered if identity_id.startswith(pattern)]
            if not matches:
                raise IdentityNotFoundError(pattern, ordered)
            chosen.update(matches)
    return [identity_id for identity_id in ordered if identity_id in chosen]


def suite_points(identity: Identity, a_grid: Sequence[float]) -> list[dict[str, ParamValue]]:
    """
    Parameter points for one identity.

    The identity's own grid if it declares one; the a-grid (minus points
    outside the domain) for identities in ``a`` alone; a single run otherwise.
    """
    if identity.grid is not None:
        points = [dict(p) for p in identity.grid]
    elif identity.params == ("a",):
        points = [{"a": float(a)} for a in a_grid]
    else:
        points = [{}]
    return [p for p in points if identity.param_domain.violation(p) is None]


def _check(
    identity_id: str,
    params: dict[str, ParamValue],
    qcfg: QuadConfig,
    scfg: Optional[SumConfig],
    tol: float,
    timing: bool,
) -> list[VerificationResult]:
    try:
        return verify_identity(identity_id, params, qcfg, scfg, tol, timing)
    except EVALUATION_ERRORS as e:
        log_verify_event(logger, identity_id, "error", params=params, error=error_note(e))
        return [
            VerificationResult(
                identity_id=identity_id,
                params=params,
                tol=tol,
                verdict="inconclusive",
                mode_notes=error_note(e),
            )
        ]


def run_suite(
    ids: Optional[Sequence[str]] = None,
    a_grid: Sequence[float] = NumericDefaults.A_GRID,
    tol: float = NumericDefaults.TOL,
    qcfg: Optional[QuadConfig] = None,
    scfg: Optional[SumConfig] = None,
    timing: bool = False,
    max_workers: Optional[int] = None,
) -> list[VerificationResult]:
    """
    Verify identities over their parameter points.

    Checks run concurrently; the returned list is always sorted by
    (identity_id, params) with pairing order kept within a point. A failing
    check never aborts the suite.

    Args:
        ids: Exact registry ids (None runs the whole registry)
        a_grid: Values of ``a`` for identities parameterized by ``a`` alone
        tol: Verdict tolerance
        qcfg: Quadrature configuration
        scfg: Series overrides
        timing: Record wall times
        max_workers: Thread pool size (defaults to settings.max_workers)

    Returns:
        Canonically ordered results
    """
    qcfg = qcfg or QuadConfig()
    registry = {identity.id: identity for identity in build_registry()}
    selected = list(registry) if ids is None else list(ids)

    tasks = []
    for identity_id in selected:
        identity = registry.get(identity_id) or get_identity(identity_id)
        for point in suite_points(identity, a_grid):
            tasks.append((identity_id, point))

    logger.info(
        f"Running {len(tasks)} checks over {len(selected)} identities",
        extra={"component": "verify", "event": "suite_started"},
    )
    workers = max_workers or get_settings().max_workers
    with ThreadPoolExecutor(max_workers=workers) as pool:
        batches = list(
            pool.map(lambda task: _check(task[0], task[1], qcfg, scfg, tol, timing), tasks)
        )

    results = [result for batch in batches for result in batch]
    return sorted(results, key=lambda r: (r.identity_id, params_key(r.params)))
