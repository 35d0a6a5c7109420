"""
Adaptive Gauss-Kronrod (7/15) quadrature with global bisection.

The panel with the largest error estimate is bisected until the summed
estimate meets max(abs_tol, rel_tol * |value|) or the panel budget runs out.
Error estimates follow QUADPACK's qk15 heuristics.
"""

import heapq
import logging
import math
from typing import Callable, Optional, Sequence

import numpy as np

from logkernel.logging_config import get_logger, log_quad_event
from logkernel.models.quadrature import QuadConfig, QuadResult
from logkernel.utils.numeric_utils import EPS


logger = get_logger("quad")

Integrand = Callable[[np.ndarray], np.ndarray]

# Kronrod abscissae (positive half, descending, last is the centre)
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])

_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])

# Gauss weights for Kronrod nodes 1, 3, 5 and the centre
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# Full 15-node layout: -x0..-x6, 0, x6..x0
_NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[-2::-1]])
_WEIGHTS_K = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[-2::-1]])
_WEIGHTS_G = np.zeros(15)
for _i, _w in zip((1, 3, 5), _WG[:3]):
    _WEIGHTS_G[_i] = _w
    _WEIGHTS_G[14 - _i] = _w
_WEIGHTS_G[7] = _WG[3]

_UFLOW = np.finfo(float).tiny


def gk15(f: Integrand, lo: float, hi: float) -> tuple[float, float]:
    """
    One Gauss-Kronrod panel.

    Returns:
        (Kronrod estimate, error estimate); the error is inf if f produced
        non-finite values on the panel
    """
    centre = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fx = np.asarray(f(centre + half * _NODES), dtype=float)
    if not np.all(np.isfinite(fx)):
        return float(np.nansum(np.where(np.isfinite(fx), fx, 0.0) * _WEIGHTS_K) * half), math.inf

    resk = float(np.dot(_WEIGHTS_K, fx))
    resg = float(np.dot(_WEIGHTS_G, fx))
    reskh = 0.5 * resk
    resabs = float(np.dot(_WEIGHTS_K, np.abs(fx))) * abs(half)
    resasc = float(np.dot(_WEIGHTS_K, np.abs(fx - reskh))) * abs(half)

    result = resk * half
    err = abs((resk - resg) * half)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > _UFLOW / (50.0 * EPS):
        err = max(50.0 * EPS * resabs, err)
    return result, err


def integrate_adaptive(
    f: Integrand,
    lo: float,
    hi: float,
    cfg: Optional[QuadConfig] = None,
    breakpoints: Optional[Sequence[float]] = None,
) -> QuadResult:
    """
    Integrate a vectorised function over [lo, hi].

    Args:
        f: Function accepting and returning numpy arrays
        lo: Lower limit (finite)
        hi: Upper limit (finite, > lo)
        cfg: Tolerances and panel budget
        breakpoints: Optional interior points forming the initial mesh

    Returns:
        QuadResult; non-convergence is reported with converged=False
    """
    cfg = cfg or QuadConfig()
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise ValueError(f"integration limits must be finite with lo < hi (got {lo}, {hi})")

    mesh = [lo]
    for p in sorted(breakpoints or ()):
        if lo < p < hi and p > mesh[-1]:
            mesh.append(float(p))
    mesh.append(hi)

    heap: list[tuple[float, int, float, float, float]] = []
    counter = 0
    for a, b in zip(mesh[:-1], mesh[1:]):
        value, err = gk15(f, a, b)
        heapq.heappush(heap, (-err, counter, a, b, value))
        counter += 1

    def totals() -> tuple[float, float]:
        values = [item[4] for item in heap]
        errors = [-item[0] for item in heap]
        return math.fsum(values), math.fsum(errors)

    total, error = totals()
    while len(heap) < cfg.max_subdivisions:
        if error <= max(cfg.abs_tol, cfg.rel_tol * abs(total)):
            break
        neg_err, _, a, b, old_value = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if not a < mid < b:
            # Panel cannot be split further in double precision
            heapq.heappush(heap, (neg_err, counter, a, b, old_value))
            counter += 1
            break
        for sub_lo, sub_hi in ((a, mid), (mid, b)):
            value, err = gk15(f, sub_lo, sub_hi)
            heapq.heappush(heap, (-err, counter, sub_lo, sub_hi, value))
            counter += 1
        total, error = totals()

    converged = error <= max(cfg.abs_tol, cfg.rel_tol * abs(total))
    if not converged:
        log_quad_event(
            logger,
            "not_converged",
            data={"lo": lo, "hi": hi, "value": total, "error_estimate": error, "panels": len(heap)},
            level=logging.WARNING,
        )
    return QuadResult(
        value=total,
        error_estimate=error if math.isfinite(error) else 1e300,
        subdivisions_used=len(heap),
        converged=converged,
    )
