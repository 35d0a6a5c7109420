"""
Bernoulli numbers, the Riemann zeta function on s > 1, and the dilogarithm.

Bernoulli numbers come from the finite double sum

    B_m = sum_{k=0}^{m} 1/(k+1) sum_{j=0}^{k} (-1)^j C(k,j) (j+1)^m

evaluated exactly with Fractions (this form gives B_1 = +1/2). Past
EXACT_LIMIT the even numbers use the zeta relation

    B_2k = (-1)^(k+1) 2 (2k)! zeta(2k) / (2 pi)^(2k).
"""

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from logkernel.exceptions import BernoulliOverflowError, DomainError
from logkernel.models.specfun import BernoulliConvention, BernoulliTable
from logkernel.specfun.constants import TWO_PI, ZETA2


K_MAX = 40
EXACT_LIMIT = 16

# Terms summed directly before the Euler-Maclaurin tail
ZETA_DIRECT_TERMS = 100_000


@lru_cache(maxsize=None)
def bernoulli_number(m: int) -> Fraction:
    """
    Exact Bernoulli number B_m from the double-sum definition.

    Args:
        m: Index, m >= 0

    Returns:
        B_m as a Fraction (B_1 = +1/2, B_odd = 0 for odd m >= 3)
    """
    if m < 0:
        raise DomainError("bernoulli_number", m, "m >= 0")
    total = Fraction(0)
    for k in range(m + 1):
        inner = sum((-1) ** j * math.comb(k, j) * (j + 1) ** m for j in range(k + 1))
        total += Fraction(inner, k + 1)
    return total


def bernoulli_even_from_zeta(k: int) -> float:
    """B_2k through the zeta relation."""
    return (-1) ** (k + 1) * 2.0 * math.factorial(2 * k) * zeta(2.0 * k) / TWO_PI ** (2 * k)


def bernoulli_even(k: int, convention: BernoulliConvention = "modern", k_max: int = K_MAX) -> float:
    """
    Even-index Bernoulli number.

    Args:
        k: Index (entry B_2k under modern, |B_2k| as archaic symbol B_k)
        convention: "modern" (signed B_2k) or "archaic" (|B_2k|)
        k_max: Largest supported k

    Returns:
        Float value

    Raises:
        BernoulliOverflowError: k > k_max
        DomainError: k < 1
    """
    if k < 1:
        raise DomainError("bernoulli_even", k, "k >= 1")
    if k > k_max:
        raise BernoulliOverflowError(k, k_max)
    if k <= EXACT_LIMIT:
        value = float(bernoulli_number(2 * k))
    else:
        value = bernoulli_even_from_zeta(k)
    return abs(value) if convention == "archaic" else value


@lru_cache(maxsize=None)
def bernoulli_table(convention: BernoulliConvention = "modern", k_max: int = K_MAX) -> BernoulliTable:
    """Frozen table of entries 1..k_max under one convention."""
    values = tuple(bernoulli_even(k, convention, k_max) for k in range(1, k_max + 1))
    return BernoulliTable(values=values, convention=convention)


def odd_symbol_bernoulli(index: int, convention: BernoulliConvention) -> float:
    """
    Value of the table symbol B_index for odd index.

    Modern reading: the literal B_index, i.e. +1/2 for index 1 and 0 otherwise.
    Archaic reading: |B_(2*index)|.
    """
    if convention == "modern":
        return float(bernoulli_number(index))
    if not 1 <= index <= K_MAX:
        raise BernoulliOverflowError(index, K_MAX)
    return bernoulli_table("archaic").get(index)


@lru_cache(maxsize=4096)
def zeta(s: float) -> float:
    """
    Riemann zeta function for real s > 1.

    Direct compensated sum of n^-s for n < N plus the Euler-Maclaurin tail
    N^(1-s)/(s-1) + N^-s/2 + s N^(-s-1)/12 - s(s+1)(s+2) N^(-s-3)/720.

    Raises:
        DomainError: s <= 1
    """
    if not s > 1.0:
        raise DomainError("zeta", s, "s > 1")
    n_direct = ZETA_DIRECT_TERMS
    # Large s converges after a handful of terms
    if s > 8.0:
        n_direct = max(16, min(n_direct, int(10.0 ** (18.0 / (s - 1.0))) + 1))
    n = np.arange(1, n_direct, dtype=float)
    head = math.fsum(np.power(n, -s).tolist())
    big_n = float(n_direct)
    tail = (
        big_n ** (1.0 - s) / (s - 1.0)
        + 0.5 * big_n ** (-s)
        + s * big_n ** (-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * big_n ** (-s - 3.0) / 720.0
    )
    return head + tail


def dilog(x: float) -> float:
    """
    Dilogarithm Li_2(x) = -int_0^x ln(1-t)/t dt on [0, 1].

    Power series for x <= 1/2, Euler reflection above.

    Raises:
        DomainError: x outside [0, 1]
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError("dilog", x, "0 <= x <= 1")
    if x == 1.0:
        return ZETA2
    if x <= 0.5:
        return _dilog_series(x)
    return ZETA2 - math.log(x) * math.log1p(-x) - _dilog_series(1.0 - x)


def _dilog_series(x: float) -> float:
    terms = []
    power = x
    k = 1
    while power > 0.0:
        term = power / (k * k)
        terms.append(term)
        if term < 1e-18:
            break
        k += 1
        power *= x
    return math.fsum(terms)
