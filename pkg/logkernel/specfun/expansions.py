"""
Classical series expansions used as lemma checks.

    kummer_ln_gamma     Fourier series of ln Gamma on (0, 1)
    tanh_saalschuetz    partial-fraction series of tanh
    kummer_trig_integral  exact trigonometric integral met in the Kummer argument

The ``*_with_error`` variants also return a measured error bound.
"""

import cmath
import math

import numpy as np

from logkernel.exceptions import DomainError
from logkernel.specfun.constants import EULER_GAMMA, LN2, LN_PI
from logkernel.utils.numeric_utils import EPS, backward_difference


# Summation-by-parts depth for the Kummer tail
KUMMER_TAIL_ORDER = 4
# The tail starts at M with M |1 - z| >= KUMMER_MIN_PHASE when the budget allows
KUMMER_MIN_PHASE = 1024.0
KUMMER_MAX_TERMS = 1 << 22
# Below this the summation by parts diverges; only the Abel bound is used
KUMMER_TAIL_PHASE = 4.0 * KUMMER_TAIL_ORDER


def _kummer_weights(k: np.ndarray) -> np.ndarray:
    """h(k) = ln k / k."""
    return np.log(k) / k


def _kummer_difference(m: int, j: int) -> float:
    """
    (nabla^j h)(m + j) for h(k) = ln k / k.

    With ln k = ln m + log1p((k - m)/m), the ln m part has the exact difference
    (-1)^j j! / (m (m+1) ... (m+j)); only the small log1p part is differenced
    numerically.
    """
    exact = math.log(m) * (-1.0) ** j * math.factorial(j) / math.prod(float(m + i) for i in range(j + 1))
    ks = np.arange(m, m + j + 1, dtype=float)
    small = np.log1p((ks - m) / m) / ks
    return exact + backward_difference(small, j)


def kummer_ln_gamma_with_error(y: float, terms: int = 100_000) -> tuple[float, float]:
    """
    Kummer's series

        ln Gamma(y) = (1/2 - y)(gamma + ln 2) + (1 - y) ln pi - (1/2) ln sin(pi y)
                      + (1/pi) sum_{k>=1} ln(k)/k sin(2 pi k y)

    summed explicitly for k < M; the tail sum_{k>=M} h(k) z^k with
    z = e^{2 pi i y} is accelerated by repeated summation by parts:

        sum_{j<J} (nabla^j h)(M+j) z^(M+j) / (1-z)^(j+1)

    M is at least ``terms + 1`` and is raised (up to KUMMER_MAX_TERMS) until
    M |1 - z| >= KUMMER_MIN_PHASE, since the j-th tail term shrinks like
    j! / (M |1 - z|)^j. The remainder after J terms is bounded by
    2 |(nabla^J h)(M+J)| / |1-z|^(J+1) (Abel); when M |1 - z| stays small the
    tail is dropped and bounded by 2 h(M) / |1 - z| instead.

    Args:
        y: Argument in (0, 1)
        terms: Minimum number of explicit terms (>= 1)

    Returns:
        (approximation to ln Gamma(y), error bound)

    Raises:
        DomainError: y outside (0, 1) or terms < 1
    """
    if not 0.0 < y < 1.0:
        raise DomainError("kummer_ln_gamma", y, "0 < y < 1")
    if terms < 1:
        raise DomainError("kummer_ln_gamma", terms, "terms >= 1")

    # sin(2 pi k y) is 1-periodic in y for integer k
    y_red = y if y <= 0.5 else y - 1.0
    gap = 2.0 * math.sin(math.pi * min(y, 1.0 - y))
    wanted = math.ceil(KUMMER_MIN_PHASE / gap)
    m = max(terms + 1, 3, min(wanted, KUMMER_MAX_TERMS + 1))
    phase = m * gap

    k = np.arange(1, m, dtype=float)
    weights = _kummer_weights(k)
    head = math.fsum((weights * np.sin(2.0 * math.pi * k * y_red)).tolist())
    # Argument reduction and the sine itself: eps * (1 + 2 pi k |y|) per term
    head_err = EPS * math.fsum((weights * (1.0 + 2.0 * math.pi * k * abs(y_red))).tolist())

    z = cmath.exp(2j * math.pi * y_red)
    order = KUMMER_TAIL_ORDER
    tail = 0j
    if phase >= KUMMER_TAIL_PHASE:
        magnitudes = []
        for j in range(order + 1):
            term = _kummer_difference(m, j) * z ** (m + j) / (1.0 - z) ** (j + 1)
            magnitudes.append(abs(term))
            if j < order:
                tail += term
        truncation = 2.0 * magnitudes[order]
        tail_err = truncation + EPS * (8.0 + 2.0 * math.pi * abs(y_red) * (m + order)) * sum(magnitudes)
    else:
        tail_err = 2.0 * math.log(m) / m / gap

    series = (head + tail.imag) / math.pi
    closed = (0.5 - y) * (EULER_GAMMA + LN2) + (1.0 - y) * LN_PI - 0.5 * math.log(math.sin(math.pi * y))
    value = closed + series
    error = (head_err + tail_err) / math.pi + 8.0 * EPS * (abs(closed) + abs(series))
    return value, error


def kummer_ln_gamma(y: float, terms: int = 100_000) -> float:
    """Kummer's series for ln Gamma(y), 0 < y < 1 (see kummer_ln_gamma_with_error)."""
    return kummer_ln_gamma_with_error(y, terms)[0]


def kummer_trig_integral(k: int) -> float:
    """
    Exact value of

        int_{3/4}^{1} sin(2 pi k y) cos(4 pi y) dy - int_{1/4}^{1/2} sin(2 pi k y) cos(4 pi y) dy

    which is 0 for even k and -k / (pi (k^2 - 4)) for odd k.

    Raises:
        DomainError: k < 1
    """
    if k < 1:
        raise DomainError("kummer_trig_integral", k, "k >= 1")
    if k % 2 == 0:
        return 0.0
    return -k / (math.pi * (k * k - 4))


def _saalschuetz_sum(x: float, terms: int, tail_corrected: bool) -> float:
    k = np.arange(terms, dtype=float)
    denom = (2.0 * k + 1.0) ** 2 * math.pi**2 + 4.0 * x * x
    partial = math.fsum((8.0 * x / denom).tolist())
    if not tail_corrected:
        return partial

    n = float(terms)
    odd = 2.0 * n + 1.0
    d_n = odd * odd * math.pi**2 + 4.0 * x * x
    g_n = 8.0 * x / d_n
    dg_n = -32.0 * x * math.pi**2 * odd / (d_n * d_n)
    integral = (2.0 / math.pi) * math.atan(2.0 * x / (odd * math.pi))
    return math.fsum([partial, integral, 0.5 * g_n, -dg_n / 12.0])


def tanh_saalschuetz(x: float, terms: int = 10_000, tail_corrected: bool = True) -> float:
    """
    tanh(x) = 8x sum_{k>=0} 1 / ((2k+1)^2 pi^2 + 4x^2)

    summed for k < terms, optionally plus the tail

        (2/pi) atan(2x / ((2N+1) pi)) + g(N)/2 - g'(N)/12

    with g(k) = 8x / ((2k+1)^2 pi^2 + 4x^2).

    Raises:
        DomainError: terms < 1
    """
    if terms < 1:
        raise DomainError("tanh_saalschuetz", terms, "terms >= 1")
    return _saalschuetz_sum(x, terms, tail_corrected)


def tanh_saalschuetz_with_error(x: float, terms: int = 10_000) -> tuple[float, float]:
    """
    Tail-corrected Saalschuetz sum with an error estimate.

    The error is the change against the sum with half as many terms, whose
    own truncation error is larger by about 2^5, plus a roundoff floor.

    Raises:
        DomainError: terms < 2
    """
    if terms < 2:
        raise DomainError("tanh_saalschuetz", terms, "terms >= 2")
    value = _saalschuetz_sum(x, terms, True)
    coarse = _saalschuetz_sum(x, terms // 2, True)
    return value, abs(value - coarse) + 8.0 * EPS * abs(value)
