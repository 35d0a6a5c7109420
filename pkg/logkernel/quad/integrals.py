"""
Log-kernel integrals on (0,1), (1,inf) and (0,inf).

Everything is integrated in t = -ln x (t = ln x on (1, inf)), where the
integrands decay exponentially. The range is truncated at the first T with
envelope(T) * C * exp(-kappa T) / kappa <= abs_tol / 10 and that bound is
added to the error estimate.

Kernels with a^2 - ln^2 x have a pole at t = a. m = 1 is taken as a Cauchy
principal value, m = 2 as a Hadamard finite part, both defined in t.
"""

import math
from typing import Optional

import numpy as np

from logkernel.exceptions import IntegrandSpecError
from logkernel.logging_config import get_logger, log_quad_event
from logkernel.models.catalog import IntegrandSpec
from logkernel.models.quadrature import QuadConfig, QuadResult, combine_results
from logkernel.quad.gauss_kronrod import integrate_adaptive
from logkernel.quad.kernels import (
    TKernel,
    is_inversion_symmetric,
    kernel_moment,
    legendre_kernel,
    log_kernel_01,
    log_ratio_kernel,
)
from logkernel.utils.numeric_utils import EPS, geometric_breakpoints, graded_breakpoints


logger = get_logger("quad")

# Share of abs_tol reserved for the truncated tail
TAIL_SHARE = 0.1
# Levels of the graded mesh at a logarithmic endpoint singularity
SINGULAR_LEVELS = 40
# Half-width of the Gauss-Legendre window around a pole, relative to the pole;
# the folded differences carry about eps |h| / u^m of cancellation noise
POLE_WINDOW = 0.1
WINDOW_ORDERS = (8, 12)


def _tail_bound(kernel: TKernel, t: float) -> float:
    envelope = float(kernel.envelope(np.array([t]))[0])
    return envelope * kernel.decay_const * math.exp(-kernel.decay_rate * t) / kernel.decay_rate


def _truncation(kernel: TKernel, cfg: QuadConfig) -> tuple[float, float]:
    """(T, tail bound at T), stepping T by 1/kappa from the monotone point."""
    target = cfg.abs_tol * TAIL_SHARE
    step = 1.0 / kernel.decay_rate
    t = kernel.monotone_from
    cap = kernel.monotone_from + cfg.tail_cutoff_margin * step
    bound = _tail_bound(kernel, t)
    while bound > target and t < cap:
        t = min(t + step, cap)
        bound = _tail_bound(kernel, t)
    if bound > target:
        log_quad_event(
            logger,
            "tail_cutoff_capped",
            data={"T": t, "tail_bound": bound, "target": target},
        )
    return t, bound


def _mesh(kernel: TKernel, upper: float, lower: float = 0.0, scale: float = 1.0) -> list[float]:
    start = min(1.0, 0.25 * scale)
    points = [p for p in geometric_breakpoints(upper, start=start) if p > lower]
    if kernel.singular_at_zero:
        points = graded_breakpoints(SINGULAR_LEVELS, upper=min(1.0, upper)) + points
    return points


def _integrate_regular(kernel: TKernel, cfg: QuadConfig, scale: float) -> QuadResult:
    """int_0^inf G(t) dt for a kernel without interior poles."""
    upper, bound = _truncation(kernel, cfg)
    body = integrate_adaptive(
        kernel.func,
        0.0,
        upper,
        cfg.scaled(1.0 - TAIL_SHARE),
        breakpoints=_mesh(kernel, upper, scale=scale),
    )
    return combine_results([(1.0, body)], cfg, extra_error=bound)


def _window_integral(fold, u0: float, h_scale: float, m: int) -> tuple[float, float]:
    """
    int_0^u0 S(u) du for the even, analytic fold S by Gauss-Legendre on [-u0, u0].

    Both orders are even so no node sits on the pole. The error is the change
    between the two orders plus the cancellation noise of the folded
    differences, about 4 eps |h| / u^m at a node.

    Returns:
        (value, error estimate)
    """
    estimates = []
    noise = 0.0
    for order in WINDOW_ORDERS:
        x, w = np.polynomial.legendre.leggauss(order)
        u = u0 * np.abs(x)
        s = np.asarray(fold(u), dtype=float)
        estimates.append(0.5 * u0 * float(np.dot(w, s)))
        cancellation = 4.0 * EPS * h_scale * float(np.dot(w, u ** (-m)))
        noise = 0.5 * u0 * (cancellation + 50.0 * EPS * float(np.dot(w, np.abs(s))))
    return estimates[-1], abs(estimates[-1] - estimates[0]) + noise


def _integrate_regularized(kernel: TKernel, cfg: QuadConfig) -> QuadResult:
    """
    Principal value (m = 1) or finite part (m = 2) of int_0^inf h(t)/(q - t)^m dt.

    With h regular at the pole q, the interval [0, 2q] is folded around q:

        PV: int_0^q [h(q-u) - h(q+u)] / u du
        FP: int_0^q [h(q-u) + h(q+u) - 2 h(q)] / u^2 du - 2 h(q) / q

    and [2q, T] is integrated directly. The fold is even and analytic in u;
    [0, POLE_WINDOW q] goes to a fixed Gauss-Legendre rule, the rest of
    [0, q] to the adaptive integrator.
    """
    q = kernel.pole
    h = kernel.regular_part
    m = kernel.denom_power
    if q is None or h is None:
        raise IntegrandSpecError("regularised integration needs a pole and its regular part")

    h_pole = float(h(np.array([q]))[0])
    if m == 1:
        def fold(u: np.ndarray) -> np.ndarray:
            return (h(q - u) - h(q + u)) / u

        correction = 0.0
        regularization = "principal_value"
    else:
        def fold(u: np.ndarray) -> np.ndarray:
            return (h(q - u) + h(q + u) - 2.0 * h_pole) / (u * u)

        correction = -2.0 * h_pole / q
        regularization = "finite_part"

    inner_cfg = cfg.scaled(0.3)
    u0 = POLE_WINDOW * q
    h_scale = float(np.max(np.abs(h(np.array([q - u0, q, q + u0])))))
    window, window_err = _window_integral(fold, u0, h_scale, m)
    folded = integrate_adaptive(fold, u0, q, inner_cfg, breakpoints=[0.5 * q])

    upper, bound = _truncation(kernel, cfg)
    parts: list[tuple[float, QuadResult]] = [(1.0, folded)]
    if upper > 2.0 * q:
        far = integrate_adaptive(
            kernel.func,
            2.0 * q,
            upper,
            inner_cfg,
            breakpoints=_mesh(kernel, upper, lower=2.0 * q, scale=q),
        )
        parts.append((1.0, far))

    result = combine_results(
        parts,
        cfg,
        extra_error=bound + window_err,
        offset=window + correction,
    )
    return result.model_copy(update={"regularization": regularization})


def _kernel_01(spec: IntegrandSpec) -> TKernel:
    if spec.family == "log_ratio_kernel":
        return log_ratio_kernel(spec)
    if spec.family == "legendre_t_kernel":
        raise IntegrandSpecError("legendre_t_kernel is integrated by integrate_legendre", spec.model_dump())
    return log_kernel_01(spec)


def integrate_logkernel_01(spec: IntegrandSpec, cfg: Optional[QuadConfig] = None) -> QuadResult:
    """
    Integral of the IntegrandSpec's integrand over x in (0, 1).

    Args:
        spec: Bound integrand descriptor (shift, n, power resolved)
        cfg: Tolerances

    Returns:
        QuadResult with the tail bound included in error_estimate

    Raises:
        IntegrandSpecError: unbound or divergent integrand
    """
    cfg = cfg or QuadConfig()
    kernel = _kernel_01(spec)
    if kernel.pole is not None:
        result = _integrate_regularized(kernel, cfg)
    else:
        result = _integrate_regular(kernel, cfg, scale=spec.shift or 1.0)
    if not result.converged:
        log_quad_event(
            logger,
            "integrand_not_converged",
            data={"integrand": spec.describe(), "value": result.value, "error_estimate": result.error_estimate},
        )
    return result


def integrate_logkernel_1inf(spec: IntegrandSpec, cfg: Optional[QuadConfig] = None) -> QuadResult:
    """
    Integral over x in (1, inf), mapped onto (0, 1) by x -> 1/x.

    Outers invariant under the inversion give (-1)^p times the (0,1) integral.
    For 1/(1+x) the image weight is 1 - 1/(e^t + 1), so the result is the
    kernel moment minus a (0,1)-type integral.

    Raises:
        IntegrandSpecError: outer factor not integrable on (1, inf), divergent
            moment, or a^2 - ln^2 x kernel
    """
    cfg = cfg or QuadConfig()
    if spec.kernel_sign < 0:
        raise IntegrandSpecError("a^2 - ln^2 x kernels are only supported on (0,1)", spec.model_dump())
    sign = -1.0 if spec.log_power == 1 else 1.0
    if spec.family != "log_ratio_kernel" and spec.shift is None:
        raise IntegrandSpecError("integrand shift a is unbound", spec.model_dump())

    if is_inversion_symmetric(spec):
        inner = integrate_logkernel_01(spec.with_interval("0_1"), cfg)
        return combine_results([(sign, inner)], cfg)

    if spec.outer == "inv_1px" and spec.family == "log_kernel":
        moment = spec.scale * kernel_moment(spec.log_power, spec.denom_power, spec.shift)
        inner = integrate_logkernel_01(spec.with_interval("0_1"), cfg)
        return combine_results([(-sign, inner)], cfg, offset=moment)

    raise IntegrandSpecError(
        f"outer factor {spec.outer} is not integrable on (1, inf)", spec.model_dump()
    )


def integrate_logkernel_0inf(spec: IntegrandSpec, cfg: Optional[QuadConfig] = None) -> QuadResult:
    """(0, inf) as the sum of the (0,1) and (1,inf) pieces, errors added."""
    cfg = cfg or QuadConfig()
    lower = integrate_logkernel_01(spec.with_interval("0_1"), cfg)
    upper = integrate_logkernel_1inf(spec.with_interval("1_inf"), cfg)
    return combine_results([(1.0, lower), (1.0, upper)], cfg)


def integrate_legendre(a: float, b: float, cfg: Optional[QuadConfig] = None) -> QuadResult:
    """
    int_0^inf t / ((e^{bt} + 1)(t^2 + a^2)) dt, directly in t.

    Raises:
        IntegrandSpecError: a or b not positive
    """
    if not (a > 0 and b > 0):
        raise IntegrandSpecError(f"legendre kernel needs a > 0 and b > 0 (got a={a}, b={b})")
    cfg = cfg or QuadConfig()
    return _integrate_regular(legendre_kernel(a, b), cfg, scale=a)


def integrate_spec(spec: IntegrandSpec, cfg: Optional[QuadConfig] = None) -> QuadResult:
    """Route a bound spec to the integrator for its family and interval."""
    if spec.family == "legendre_t_kernel":
        if spec.shift is None or spec.rate is None:
            raise IntegrandSpecError("legendre kernel needs a and b bound", spec.model_dump())
        return combine_results(
            [(spec.scale, integrate_legendre(spec.shift, spec.rate, cfg))], cfg or QuadConfig()
        )
    if spec.interval == "0_1":
        return integrate_logkernel_01(spec, cfg)
    if spec.interval == "1_inf":
        return integrate_logkernel_1inf(spec, cfg)
    return integrate_logkernel_0inf(spec, cfg)
