"""
Lemma routines: left-hand sides that are not plain log-kernel integrals.

Every routine takes the identity's parameter point and a QuadConfig and
returns a QuadResult, so the harness treats them like quadratures.
"""

import math
from typing import Callable, Optional

import numpy as np

from logkernel.exceptions import CatalogError, DomainError
from logkernel.models.catalog import IntegrandSpec
from logkernel.models.quadrature import QuadConfig, QuadResult, combine_results
from logkernel.models.series import ParamValue
from logkernel.quad.gauss_kronrod import integrate_adaptive
from logkernel.quad.integrals import integrate_logkernel_0inf
from logkernel.specfun import (
    aux_f,
    aux_g,
    bernoulli_even,
    ei_imag,
    kummer_ln_gamma_with_error,
    tanh_saalschuetz_with_error,
)
from logkernel.utils.numeric_utils import EPS


Routine = Callable[[dict[str, ParamValue], QuadConfig], QuadResult]


def _exact(value: float, error: float) -> QuadResult:
    return QuadResult(value=value, error_estimate=error, subdivisions_used=0, converged=True)


def moment_integral(k: int, a: float, log_power: int) -> float:
    """
    int_0^1 (-x)^k ln(x)^p / (a^2 + ln^2 x) dx in closed form.

    With z = a (k+1) and the auxiliary functions f, g of the sine and cosine
    integrals:

        p = 0:  (-1)^k f(z) / a
        p = 1:  (-1)^(k+1) g(z)

    At a = pi, p = 1 this is -Ci((k+1) pi).

    Raises:
        DomainError: k < 0, a <= 0 or p not in {0, 1}
    """
    if k < 0:
        raise DomainError("moment_integral", k, "k >= 0")
    if not a > 0:
        raise DomainError("moment_integral", a, "a > 0")
    z = a * (k + 1)
    sign = -1.0 if k % 2 else 1.0
    if log_power == 0:
        return sign * aux_f(z) / a
    if log_power == 1:
        return -sign * aux_g(z)
    raise DomainError("moment_integral", log_power, "p in {0, 1}")


def summation_formula_result(s: float, cfg: Optional[QuadConfig] = None) -> QuadResult:
    """
    -2 pi int_{-inf}^{inf} F(1/2 + it) / (e^{pi t} + e^{-pi t})^2 dt,  F(x) = x^(1-s)/(1-s).

    Only the real part survives the symmetric integral, so this is

        -pi/(1-s) int_0^inf r^(1-s) cos((1-s) atan(2t)) sech^2(pi t) dt,  r = sqrt(1/4 + t^2)

    truncated where the bound 2^s e^(-2 pi T) / (s-1) drops below abs_tol/10.

    Raises:
        DomainError: s <= 1
    """
    if not s > 1.0:
        raise DomainError("summation_formula", s, "s > 1")
    cfg = cfg or QuadConfig()
    power = 1.0 - s

    def integrand(t: np.ndarray) -> np.ndarray:
        r = np.sqrt(0.25 + t * t)
        e = np.exp(-2.0 * math.pi * t)
        sech2 = 4.0 * e / (1.0 + e) ** 2
        return r**power * np.cos(power * np.arctan(2.0 * t)) * sech2

    target = 0.1 * cfg.abs_tol
    upper = 1.0
    while 2.0**s * math.exp(-2.0 * math.pi * upper) / (s - 1.0) > target:
        upper += 0.5
    bound = 2.0**s * math.exp(-2.0 * math.pi * upper) / (s - 1.0)
    body = integrate_adaptive(integrand, 0.0, upper, cfg.scaled(0.9), breakpoints=[0.5, 1.0, 2.0])
    factor = -math.pi / power
    return combine_results([(factor, body)], cfg, extra_error=abs(factor) * bound)


def summation_formula(s: float, cfg: Optional[QuadConfig] = None) -> float:
    """Value of the sech^2 summation formula; equals zeta(s)."""
    return summation_formula_result(s, cfg).value


def zeta3_chain(cfg: Optional[QuadConfig] = None) -> QuadResult:
    """
    4 pi^4 I2 - 2 pi^2 I1 over (0, inf), with

        I1 = int 1/((pi^2 + ln^2 x)(1+x)^2) dx
        I2 = int 1/((pi^2 + ln^2 x)^2 (1+x)^2) dx

    which reduces to zeta(3).
    """
    cfg = cfg or QuadConfig()
    first = IntegrandSpec(shift=math.pi, outer="inv_1px_sq", interval="0_inf")
    second = first.model_copy(update={"denom_power": 2})
    i1 = integrate_logkernel_0inf(first, cfg)
    i2 = integrate_logkernel_0inf(second, cfg)
    return combine_results([(4.0 * math.pi**4, i2), (-2.0 * math.pi**2, i1)], cfg)


def kummer_trig_quadrature(k: int, cfg: Optional[QuadConfig] = None) -> QuadResult:
    """int_{3/4}^{1} - int_{1/4}^{1/2} of sin(2 pi k y) cos(4 pi y) dy, numerically."""
    cfg = cfg or QuadConfig()

    def integrand(y: np.ndarray) -> np.ndarray:
        return np.sin(2.0 * math.pi * k * y) * np.cos(4.0 * math.pi * y)

    upper = integrate_adaptive(integrand, 0.75, 1.0, cfg)
    lower = integrate_adaptive(integrand, 0.25, 0.5, cfg)
    return combine_results([(1.0, upper), (-1.0, lower)], cfg)


# ===========================================
# ComputedLhs routine table
# ===========================================


def _saalschuetz(params, cfg):
    return _exact(*tanh_saalschuetz_with_error(float(params["x"])))


def _kummer(params, cfg):
    return _exact(*kummer_ln_gamma_with_error(float(params["y"])))


def _kummer_trig(params, cfg):
    return kummer_trig_quadrature(int(params["k"]), cfg)


def _summation_formula(params, cfg):
    return summation_formula_result(float(params["s"]), cfg)


def _bernoulli_even(params, cfg):
    value = bernoulli_even(int(params["k"]))
    return _exact(value, EPS * abs(value))


def _zeta3_chain(params, cfg):
    return zeta3_chain(cfg)


def _ei_imag_property(params, cfg):
    # (i/2) [Ei(-ix) - Ei(ix)] with Ei(-ix) the conjugate of Ei(ix)
    z = ei_imag(float(params["x"])).to_complex()
    value = (0.5j * (z.conjugate() - z)).real
    return _exact(value, 4.0 * EPS * abs(value))


def _moment_integral(params, cfg):
    value = moment_integral(int(params["k"]), float(params["a"]), int(params.get("p", 0)))
    return _exact(value, 1e-14 * max(1.0, abs(value)))


ROUTINES: dict[str, Routine] = {
    "saalschuetz": _saalschuetz,
    "kummer": _kummer,
    "kummer_trig_quadrature": _kummer_trig,
    "summation_formula": _summation_formula,
    "bernoulli_even": _bernoulli_even,
    "zeta3_chain": _zeta3_chain,
    "ei_imag_property": _ei_imag_property,
    "moment_integral": _moment_integral,
}


def run_routine(name: str, params: dict[str, ParamValue], cfg: QuadConfig) -> QuadResult:
    """
    Run a named lemma routine.

    Raises:
        CatalogError: unknown routine
    """
    routine = ROUTINES.get(name)
    if routine is None:
        raise CatalogError(f"Unknown lemma routine: {name}", {"available": sorted(ROUTINES)})
    return routine(params, cfg)
