"""
Summation engines.

    direct                   compensated partial sums with a ratio/power-law tail estimate
    tail_corrected           partial sum + integral of a tail model + Euler-Maclaurin terms
    alternating_accelerated  Euler transform (iterated averaging) of partial sums
    cesaro_c1                (C,1) means, paired averaging and one Richardson step
    asymptotic_optimal       optimally truncated divergent series

sum_series dispatches on SeriesSpec.mode after checking the mode against
the term registry.
"""

import logging
import math
from typing import Optional

import numpy as np

from logkernel.exceptions import ModeMismatchError
from logkernel.logging_config import get_logger, log_series_event
from logkernel.models.quadrature import QuadConfig
from logkernel.models.series import ParamValue, SeriesSpec, SumResult
from logkernel.quad.gauss_kronrod import integrate_adaptive
from logkernel.series.terms import SeriesTerm, TermRegistry, term_registry
from logkernel.utils.numeric_utils import EPS, derivative_5pt, graded_breakpoints, third_derivative_5pt


logger = get_logger("series")

DIRECT_FIRST_BLOCK = 64
TAIL_CORRECTED_TERMS = 1024
EULER_FIRST_N = 32
EULER_DEPTH = 24
MISMATCH_THRESHOLD = 0.10
# Ratio below which the tail is treated as geometric
GEOMETRIC_RATIO = 0.9


def _roundoff(terms: np.ndarray) -> float:
    return 4.0 * EPS * math.fsum(np.abs(terms).tolist())


def _strictly_alternating(terms: np.ndarray) -> bool:
    return bool(len(terms) > 1 and np.all(terms[:-1] * terms[1:] < 0.0))


def _tail_estimate(terms: np.ndarray) -> float:
    """Bound on the omitted tail from the behaviour of the last computed terms."""
    n = len(terms)
    last = abs(float(terms[-1]))
    half = abs(float(terms[n // 2 - 1])) if n >= 4 else abs(float(terms[0]))
    if last == 0.0 and half == 0.0:
        return 0.0
    window = terms[n // 2 :]
    if _strictly_alternating(window) and np.all(np.diff(np.abs(window)) <= 0.0):
        return last
    if half == 0.0:
        return math.inf
    steps = n - n // 2
    ratio = (last / half) ** (1.0 / steps) if steps > 0 else 1.0
    if ratio < GEOMETRIC_RATIO:
        return last * ratio / (1.0 - ratio)
    # |t_k| ~ C k^-p
    if last == 0.0:
        return math.inf
    p = math.log(half / last) / math.log(n / max(n // 2, 1))
    if p <= 1.05:
        return math.inf
    return last * n / (p - 1.0)


def sum_direct(
    term: SeriesTerm,
    params: dict[str, ParamValue],
    max_terms: int,
    tol: float,
) -> SumResult:
    """
    Compensated partial sums in doubling blocks until the tail estimate
    drops below ``tol``. Finite series are summed in full.
    """
    length = term.finite_length(params)
    if length is not None:
        count = min(length, max_terms)
        values = term.evaluate(0, count, params)
        error = _roundoff(values)
        return SumResult(
            value=math.fsum(values.tolist()),
            error_estimate=error,
            terms_used=count,
            converged=count == length and error <= tol,
            mode_used="direct",
        )

    values = term.evaluate(0, min(DIRECT_FIRST_BLOCK, max_terms), params)
    while True:
        tail = _tail_estimate(values)
        error = tail + _roundoff(values)
        if error <= tol or len(values) >= max_terms:
            break
        extra = min(len(values), max_terms - len(values))
        values = np.concatenate([values, term.evaluate(len(values), extra, params)])

    converged = error <= tol
    if not converged:
        log_series_event(
            logger, "direct", term.term_id, "not_converged",
            data={"terms": len(values), "error_estimate": error}, level=logging.WARNING,
        )
    return SumResult(
        value=math.fsum(values.tolist()),
        error_estimate=error if math.isfinite(error) else 1e300,
        terms_used=len(values),
        converged=converged,
        mode_used="direct",
    )


def _model_tail(term: SeriesTerm, params: dict[str, ParamValue], x0: float) -> tuple[float, float]:
    """
    sum_{k >= x0} model(k) by Euler-Maclaurin:
    int_x0^inf model + model(x0)/2 - model'(x0)/12, error ~ |model'''(x0)|/720.
    """
    model = term.model

    def f(x: np.ndarray) -> np.ndarray:
        return np.asarray(model(x, params), dtype=float)

    def mapped(u: np.ndarray) -> np.ndarray:
        # x = x0 / u on u in (0, 1]
        return f(x0 / u) * x0 / (u * u)

    integral = integrate_adaptive(
        mapped, 0.0, 1.0, QuadConfig(abs_tol=1e-15, rel_tol=1e-13),
        breakpoints=graded_breakpoints(30),
    )
    f0 = float(f(np.array([x0]))[0])
    df0 = derivative_5pt(f, x0, 1.0)
    d3f0 = third_derivative_5pt(f, x0, 1.0)
    value = math.fsum([integral.value, 0.5 * f0, -df0 / 12.0])
    error = abs(d3f0) / 720.0 + integral.error_estimate + 4.0 * EPS * (abs(integral.value) + abs(f0))
    return value, error


def sum_tail_corrected(
    term: SeriesTerm,
    params: dict[str, ParamValue],
    max_terms: int,
    tol: float,
) -> SumResult:
    """
    Partial sum to N plus the Euler-Maclaurin tail of the registered model.

    N starts at TAIL_CORRECTED_TERMS and doubles (up to max_terms) while the
    error estimate exceeds ``tol``. A warning is logged when the actual terms
    and the model disagree by more than 10% near N.
    """
    if term.model is None:
        raise ModeMismatchError(term.term_id, "tail_corrected", ["direct"])
    notes: list[str] = []
    n = min(TAIL_CORRECTED_TERMS, max_terms)
    while True:
        values = term.evaluate(0, n, params)
        x0 = float(term.start + n)
        samples = np.array([x0 - 2.0, x0 - 1.0])
        actual = values[-2:]
        modelled = np.asarray(term.model(samples, params), dtype=float)
        mismatch = float(np.max(np.abs(actual - modelled) / np.maximum(np.abs(modelled), 1e-300)))
        tail, tail_err = _model_tail(term, params, x0)
        error = tail_err + _roundoff(values)
        if error <= tol or n >= max_terms:
            break
        n = min(2 * n, max_terms)

    if mismatch > MISMATCH_THRESHOLD:
        notes.append(f"tail model mismatch {mismatch:.3g}")
        log_series_event(
            logger, "tail_corrected", term.term_id, "model_mismatch",
            data={"mismatch": mismatch, "N": n}, level=logging.WARNING,
        )
    value = math.fsum(values.tolist() + [tail])
    return SumResult(
        value=value,
        error_estimate=error,
        terms_used=n,
        converged=error <= tol,
        mode_used="tail_corrected",
        notes=tuple(notes),
    )


def _euler_average(partial_sums: np.ndarray) -> tuple[float, float]:
    """Iterated averaging of consecutive partial sums; (value, last-column delta)."""
    column = partial_sums.astype(float)
    delta = math.inf
    while len(column) > 1:
        delta = abs(float(column[-1] - column[-2]))
        column = 0.5 * (column[:-1] + column[1:])
    return float(column[0]), delta


def _euler_estimate(term: SeriesTerm, params: dict[str, ParamValue], n: int) -> tuple[float, float, np.ndarray]:
    values = term.evaluate(0, n + EULER_DEPTH, params)
    base = math.fsum(values[:n].tolist())
    partial = base + np.concatenate([[0.0], np.cumsum(values[n:])])
    estimate, delta = _euler_average(partial)
    return estimate, delta, values


def sum_alternating(
    term: SeriesTerm,
    params: dict[str, ParamValue],
    max_terms: int,
    tol: float,
) -> SumResult:
    """
    Euler transform of partial sums S_N .. S_{N+24}, with N doubling from 32.

    The error is the larger of the last averaging delta and the change
    between successive N, plus a roundoff floor. Terms that do not alternate
    fall back to direct summation with a warning.
    """
    n = EULER_FIRST_N
    estimate, delta, values = _euler_estimate(term, params, n)
    if not _strictly_alternating(values[n - EULER_DEPTH:]):
        log_series_event(
            logger, "alternating_accelerated", term.term_id, "fallback_direct",
            data={"reason": "terms do not alternate"}, level=logging.WARNING,
        )
        result = sum_direct(term, params, max_terms, tol)
        return result.model_copy(update={"notes": result.notes + ("fallback_direct: terms do not alternate",)})

    error = delta + _roundoff(values)
    while 2 * n + EULER_DEPTH <= max_terms:
        n *= 2
        refined, delta, values = _euler_estimate(term, params, n)
        error = max(delta, abs(refined - estimate)) + _roundoff(values)
        estimate = refined
        if error <= tol:
            break

    converged = error <= tol
    if not converged:
        log_series_event(
            logger, "alternating_accelerated", term.term_id, "not_converged",
            data={"N": n, "error_estimate": error}, level=logging.WARNING,
        )
    return SumResult(
        value=estimate,
        error_estimate=error if math.isfinite(error) else 1e300,
        terms_used=n + EULER_DEPTH,
        converged=converged,
        mode_used="alternating_accelerated",
    )


def _cesaro_mean(weighted: np.ndarray, n: int) -> float:
    """sigma_n = (1/n) sum_{k<=n} (n-k+1) t_k, with t indexed from 1."""
    t = weighted[:n]
    weights = np.arange(n, 0, -1, dtype=float)
    return math.fsum((weights * t).tolist()) / n


def sum_cesaro_c1(
    term: SeriesTerm,
    params: dict[str, ParamValue],
    max_terms: int,
    tol: float,
) -> SumResult:
    """
    (C,1) sum from max_terms terms.

    tau_n = (sigma_n + sigma_{n+1})/2 cancels the (-1)^n/n oscillation of
    the means; R(M) = 2 tau_{2M} - tau_M removes the remaining 1/n term.
    The error is |R(M) - R(M/2)|.
    """
    n_terms = max(max_terms, 8)
    values = term.evaluate(0, n_terms, params)
    m = (n_terms - 1) // 2
    h = max(m // 2, 1)

    def tau(n: int) -> float:
        return 0.5 * (_cesaro_mean(values, n) + _cesaro_mean(values, n + 1))

    def extrapolate(n: int) -> float:
        return 2.0 * tau(2 * n) - tau(n)

    coarse = extrapolate(h)
    fine = extrapolate(m)
    error = abs(fine - coarse) + _roundoff(values[: 2 * m + 1])
    converged = error <= tol
    if not converged:
        log_series_event(
            logger, "cesaro_c1", term.term_id, "not_converged",
            data={"terms": n_terms, "error_estimate": error}, level=logging.INFO,
        )
    return SumResult(
        value=fine,
        error_estimate=error,
        terms_used=2 * m + 1,
        converged=converged,
        mode_used="cesaro_c1",
    )


def sum_asymptotic_optimal(
    term: SeriesTerm,
    params: dict[str, ParamValue],
    max_terms: int,
    tol: float,
) -> SumResult:
    """
    Sum a divergent asymptotic series up to its smallest term.

    Terms are generated one at a time; at the first index whose magnitude
    exceeds its predecessor's, the predecessor is the smallest term: the
    terms before it are summed and its magnitude is the error. A finite
    series that never turns is summed exactly.
    """
    length = term.finite_length(params)
    limit = max_terms if length is None else min(length, max_terms)
    taken: list[float] = []
    previous: Optional[float] = None
    for i in range(limit):
        current = float(term.evaluate(i, 1, params)[0])
        if previous is not None and abs(current) > abs(previous):
            error = abs(previous)
            value = math.fsum(taken[:-1])
            return SumResult(
                value=value,
                error_estimate=error,
                terms_used=len(taken) - 1,
                converged=error <= tol,
                mode_used="asymptotic_optimal",
                notes=(f"truncated before index {term.start + len(taken) - 1}",),
            )
        taken.append(current)
        previous = current

    finite = length is not None and limit == length
    error = _roundoff(np.array(taken)) if finite else abs(taken[-1])
    return SumResult(
        value=math.fsum(taken),
        error_estimate=error,
        terms_used=len(taken),
        converged=error <= tol,
        mode_used="asymptotic_optimal",
        notes=() if finite else ("no smallest term within the budget",),
    )


_ENGINES = {
    "direct": sum_direct,
    "tail_corrected": sum_tail_corrected,
    "alternating_accelerated": sum_alternating,
    "cesaro_c1": sum_cesaro_c1,
    "asymptotic_optimal": sum_asymptotic_optimal,
}


def sum_series(spec: SeriesSpec, registry: Optional[TermRegistry] = None) -> SumResult:
    """
    Sum a registered series with the requested engine.

    Args:
        spec: Term id, parameters, mode, budget and tolerance
        registry: Term registry (defaults to the built-in one)

    Returns:
        SumResult; converged implies error_estimate <= spec.tol

    Raises:
        UnknownSeriesError: term id not registered
        ModeMismatchError: mode not admissible for the term
        SeriesError: a required parameter is missing
    """
    registry = registry or term_registry
    term = registry.get(spec.term_id)
    if spec.mode not in term.modes:
        raise ModeMismatchError(spec.term_id, spec.mode, term.modes)
    params = term.resolve(spec.params)
    result = _ENGINES[spec.mode](term, params, spec.max_terms, spec.tol)
    log_series_event(
        logger, spec.mode, spec.term_id, "summed",
        data={"value": result.value, "error_estimate": result.error_estimate, "terms": result.terms_used},
    )
    return result
