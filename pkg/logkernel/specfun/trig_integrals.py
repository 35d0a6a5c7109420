"""
Sine and cosine integrals and their auxiliary functions.

    Si(x) = int_0^x sin t / t dt          si(x) = Si(x) - pi/2
    Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt

Auxiliary functions (both positive and ~1/x, 1/x^2 for large x):

    f(x) = Ci(x) sin x - si(x) cos x
    g(x) = -Ci(x) cos x - si(x) sin x

Evaluation regions:
    x <= SERIES_LIMIT          Maclaurin series
    x <  ASYMPTOTIC_LIMIT      continued fraction for e^{ix} E1(ix) = g - i f
    x >= ASYMPTOTIC_LIMIT      asymptotic series for f and g

At x = k*pi the trig factors are exact, so Ci(k pi) = (-1)^(k+1) g(k pi) and
si(k pi) = (-1)^(k+1) f(k pi) keep full relative accuracy for large k.
"""

import math

import numpy as np

from logkernel.exceptions import DomainError
from logkernel.models.specfun import ComplexPair
from logkernel.specfun.constants import EULER_GAMMA, HALF_PI


SERIES_LIMIT = 4.0
ASYMPTOTIC_LIMIT = 64.0

_CF_EPS = 1e-16
_CF_MAX_ITER = 1000
_FPMIN = 1e-300

# Enough asymptotic terms for 1e-17 relative accuracy at x >= 64
_ASYMPTOTIC_TERMS = 14


def _maclaurin(x: float) -> tuple[float, float]:
    """(Si(x), Ci(x)) by power series; x in (0, SERIES_LIMIT]."""
    si_terms = []
    ci_terms = []
    # Si: (-1)^n x^(2n+1) / ((2n+1)(2n+1)!)
    # Ci: (-1)^n x^(2n) / (2n (2n)!)
    fact_term = x  # x^(2n+1)/(2n+1)! with sign
    n = 0
    while True:
        si_t = fact_term / (2 * n + 1)
        si_terms.append(si_t)
        # x^(2n+2)/(2n+2)! from x^(2n+1)/(2n+1)!
        even_term = -fact_term * x / (2 * n + 2)
        ci_t = even_term / (2 * n + 2)
        ci_terms.append(ci_t)
        if abs(si_t) < 1e-18 and abs(ci_t) < 1e-18:
            break
        fact_term = even_term * x / (2 * n + 3)
        n += 1
        if n > 60:
            break
    si = math.fsum(si_terms)
    ci = math.fsum([EULER_GAMMA, math.log(x)] + ci_terms)
    return si, ci


def _continued_fraction(x: float) -> complex:
    """e^{ix} E1(ix) = g(x) - i f(x) by modified Lentz; x > SERIES_LIMIT."""
    b = complex(1.0, x)
    c = complex(1.0 / _FPMIN, 0.0)
    d = 1.0 / b
    h = d
    for i in range(2, _CF_MAX_ITER):
        a = -float((i - 1) * (i - 1))
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta.real - 1.0) + abs(delta.imag) < _CF_EPS:
            break
    return h


def _asymptotic_aux(x: float) -> tuple[float, float]:
    """(f(x), g(x)) by asymptotic series; x >= ASYMPTOTIC_LIMIT."""
    inv2 = 1.0 / (x * x)
    f_terms = []
    g_terms = []
    f_t = 1.0 / x
    g_t = inv2
    for n in range(_ASYMPTOTIC_TERMS):
        f_terms.append(f_t)
        g_terms.append(g_t)
        f_t *= -(2 * n + 1) * (2 * n + 2) * inv2
        g_t *= -(2 * n + 2) * (2 * n + 3) * inv2
    return math.fsum(f_terms), math.fsum(g_terms)


def _aux_pair(x: float) -> tuple[float, float]:
    """(f(x), g(x)) for x > 0."""
    if x <= SERIES_LIMIT:
        si_up, ci_v = _maclaurin(x)
        si_lo = si_up - HALF_PI
        s, c = math.sin(x), math.cos(x)
        return ci_v * s - si_lo * c, -ci_v * c - si_lo * s
    if x < ASYMPTOTIC_LIMIT:
        h = _continued_fraction(x)
        return -h.imag, h.real
    return _asymptotic_aux(x)


def _sici(x: float) -> tuple[float, float, float]:
    """(Si(x), si(x), Ci(x)) for x > 0."""
    if x <= SERIES_LIMIT:
        si_up, ci_v = _maclaurin(x)
        return si_up, si_up - HALF_PI, ci_v
    f, g = _aux_pair(x)
    s, c = math.sin(x), math.cos(x)
    si_lo = -f * c - g * s
    ci_v = f * s - g * c
    return si_lo + HALF_PI, si_lo, ci_v


def si_upper(x: float) -> float:
    """
    Si(x) for x >= 0.

    Raises:
        DomainError: x < 0
    """
    if not x >= 0.0:
        raise DomainError("Si", x, "x >= 0")
    if x == 0.0:
        return 0.0
    return _sici(x)[0]


def si_lower(x: float) -> float:
    """si(x) = Si(x) - pi/2 for x >= 0."""
    return si_upper(x) - HALF_PI


def ci(x: float) -> float:
    """
    Ci(x) for x > 0.

    Raises:
        DomainError: x <= 0
    """
    if not x > 0.0:
        raise DomainError("Ci", x, "x > 0")
    return _sici(x)[2]


def aux_f(x: float) -> float:
    """Auxiliary function f(x) = Ci sin x - si cos x, x > 0."""
    if not x > 0.0:
        raise DomainError("aux_f", x, "x > 0")
    return _aux_pair(x)[0]


def aux_g(x: float) -> float:
    """Auxiliary function g(x) = -Ci cos x - si sin x, x > 0."""
    if not x > 0.0:
        raise DomainError("aux_g", x, "x > 0")
    return _aux_pair(x)[1]


def ei_imag(x: float) -> ComplexPair:
    """
    Ei(ix) as (Ci(x), Si(x) + pi/2), x > 0.

    With Ei(-ix) the conjugate, (i/2)[Ei(-ix) - Ei(ix)] = Si(x) + pi/2.

    Raises:
        DomainError: x <= 0
    """
    if not x > 0.0:
        raise DomainError("ei_imag", x, "x > 0")
    si_up, _, ci_v = _sici(x)
    return ComplexPair(re=ci_v, im=si_up + HALF_PI)


# ===========================================
# Vectorised forms for series terms
# ===========================================


def aux_arrays(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    f and g on an array of positive arguments.

    The asymptotic region is evaluated with numpy; the rest point by point.
    """
    x = np.asarray(x, dtype=float)
    f = np.empty_like(x)
    g = np.empty_like(x)
    big = x >= ASYMPTOTIC_LIMIT
    if np.any(big):
        xb = x[big]
        inv2 = 1.0 / (xb * xb)
        f_t = 1.0 / xb
        g_t = inv2.copy()
        f_acc = np.zeros_like(xb)
        g_acc = np.zeros_like(xb)
        for n in range(_ASYMPTOTIC_TERMS):
            f_acc += f_t
            g_acc += g_t
            f_t = f_t * (-(2 * n + 1) * (2 * n + 2)) * inv2
            g_t = g_t * (-(2 * n + 2) * (2 * n + 3)) * inv2
        f[big] = f_acc
        g[big] = g_acc
    for idx in np.flatnonzero(~big):
        f[idx], g[idx] = _aux_pair(float(x[idx]))
    return f, g


def sici_kpi(k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    (si(k pi), Ci(k pi)) for integer k >= 1 with exact trig factors.

    Returns:
        Tuple of arrays (si, Ci)
    """
    k = np.asarray(k)
    f, g = aux_arrays(k * math.pi)
    sign = np.where(k % 2 == 1, 1.0, -1.0)
    return sign * f, sign * g
