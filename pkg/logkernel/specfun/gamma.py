"""
Log-gamma, digamma and polygamma of orders 1 and 2 on the real line.

digamma and polygamma shift the argument upward with the recurrence until
x >= ASYMPTOTIC_THRESHOLD and then use the Bernoulli asymptotic series.
"""

import math

from logkernel.exceptions import DomainError, PoleError, UnsupportedOrderError
from logkernel.specfun.numbers import bernoulli_even


ASYMPTOTIC_THRESHOLD = 10.0
ASYMPTOTIC_TERMS = 8
SUPPORTED_ORDERS = (1, 2)

# B_2k for k = 1..8
_B2K = tuple(bernoulli_even(k) for k in range(1, ASYMPTOTIC_TERMS + 1))


def gamma_ln(x: float) -> float:
    """
    ln Gamma(x) for x > 0.

    Raises:
        DomainError: x <= 0
    """
    if not x > 0.0:
        raise DomainError("gamma_ln", x, "x > 0")
    return math.lgamma(x)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def digamma(x: float) -> float:
    """
    psi(x) = d/dx ln Gamma(x).

    Negative non-integers go through the reflection
    psi(x) = psi(1 - x) - pi cot(pi x).

    Raises:
        PoleError: x is zero or a negative integer
    """
    if _is_nonpositive_integer(x):
        raise PoleError("digamma", x)
    if x < 0.0:
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)

    shifts = []
    while x < ASYMPTOTIC_THRESHOLD:
        shifts.append(1.0 / x)
        x += 1.0

    inv2 = 1.0 / (x * x)
    power = inv2
    series = []
    for k, b in enumerate(_B2K, start=1):
        series.append(b / (2 * k) * power)
        power *= inv2
    asymptotic = math.log(x) - 0.5 / x - math.fsum(series)
    return math.fsum([asymptotic] + [-s for s in shifts])


def polygamma(order: int, x: float) -> float:
    """
    psi^(order)(x) for order in {1, 2} and x > 0.

    Recurrences psi'(x) = psi'(x+1) + 1/x^2 and psi''(x) = psi''(x+1) - 2/x^3
    move x past the threshold; then

        psi^(n)(x) ~ (-1)^(n+1) [ (n-1)!/x^n + n!/(2 x^(n+1))
                                  + sum_k B_2k (2k+n-1)!/((2k)! x^(2k+n)) ].

    Raises:
        UnsupportedOrderError: order not in {1, 2}
        DomainError: x <= 0
    """
    if order not in SUPPORTED_ORDERS:
        raise UnsupportedOrderError(order, SUPPORTED_ORDERS)
    if not x > 0.0:
        raise DomainError("polygamma", x, "x > 0")

    n = order
    sign = 1.0 if n % 2 == 1 else -1.0
    shifts = []
    while x < ASYMPTOTIC_THRESHOLD:
        # (-1)^(n+1) n! / x^(n+1)
        shifts.append(sign * math.factorial(n) / x ** (n + 1))
        x += 1.0

    terms = [
        math.factorial(n - 1) / x**n,
        math.factorial(n) / (2.0 * x ** (n + 1)),
    ]
    for k, b in enumerate(_B2K, start=1):
        coeff = math.factorial(2 * k + n - 1) / math.factorial(2 * k)
        terms.append(b * coeff / x ** (2 * k + n))
    asymptotic = sign * math.fsum(terms)
    return math.fsum([asymptotic] + shifts)
