"""
Transformed integrands in t = -ln x (or t = ln x on (1, inf)).

Each builder returns a TKernel: the vectorised integrand in t together with
the data needed to truncate it at a finite T with a rigorous tail bound:

    |G(t)| <= envelope(t) * decay_const * exp(-decay_rate * t)   for t >= monotone_from

where envelope is non-increasing on [monotone_from, inf).
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from logkernel.exceptions import IntegrandSpecError
from logkernel.models.catalog import IntegrandSpec


ArrayFn = Callable[[np.ndarray], np.ndarray]

# Outer factors whose (1-x) behaviour needs ln(x) in the numerator on (0,1)
_VANISHING_DENOMINATOR = ("inv_1mx", "x_over_1mx2", "inv_1mx2")

# Outer factors invariant under x -> 1/x (including the Jacobian)
_INVERSION_SYMMETRIC = ("inv_1px_sq", "inv_1px2", "inv_1px_sqrtx")


@dataclass(frozen=True)
class OuterWeight:
    """w0(t) = outer(e^-t) * e^-t with its exponential decay data."""

    func: ArrayFn
    decay_rate: float
    decay_const: float


@dataclass(frozen=True)
class TKernel:
    """A transformed integrand ready for truncation."""

    func: ArrayFn
    envelope: ArrayFn
    decay_rate: float
    decay_const: float
    monotone_from: float
    singular_at_zero: bool = False
    # Pole of a kernel_sign = -1 integrand and the regular factor h(t) around it
    pole: Optional[float] = None
    regular_part: Optional[ArrayFn] = None
    denom_power: int = 1


def _logistic_tail(t: np.ndarray) -> np.ndarray:
    u = np.exp(-t)
    return u / (1.0 + u)


def _logistic_density(t: np.ndarray) -> np.ndarray:
    u = np.exp(-t)
    return u / (1.0 + u) ** 2


def outer_weight(spec: IntegrandSpec) -> OuterWeight:
    """w0(t) for the IntegrandSpec's outer factor on (0, 1)."""
    outer = spec.outer
    if outer == "inv_1px":
        return OuterWeight(_logistic_tail, 1.0, 1.0)
    if outer == "inv_1px_sq":
        return OuterWeight(_logistic_density, 1.0, 1.0)
    if outer == "inv_1mx":
        return OuterWeight(lambda t: 1.0 / np.expm1(t), 1.0, 1.0 / (1.0 - math.exp(-1.0)))
    if outer == "x_over_1mx2":
        return OuterWeight(lambda t: 1.0 / np.expm1(2.0 * t), 2.0, 1.0 / (1.0 - math.exp(-2.0)))
    if outer == "inv_1mx2":
        return OuterWeight(lambda t: 0.5 / np.sinh(t), 1.0, 1.0 / (1.0 - math.exp(-2.0)))
    if outer == "inv_1px2":
        return OuterWeight(lambda t: 0.5 / np.cosh(t), 1.0, 1.0)
    if outer == "inv_1px_sqrtx":
        return OuterWeight(lambda t: 0.5 / np.cosh(0.5 * t), 0.5, 1.0)
    if outer == "alternating_monomial":
        if spec.power is None:
            raise IntegrandSpecError("alternating_monomial needs a power k", spec.model_dump())
        k = spec.power
        sign = -1.0 if k % 2 else 1.0
        return OuterWeight(lambda t: sign * np.exp(-(k + 1) * t), float(k + 1), 1.0)
    raise IntegrandSpecError(f"unknown outer factor '{outer}'")


def _require_shift(spec: IntegrandSpec) -> float:
    if spec.shift is None:
        raise IntegrandSpecError("integrand shift a is unbound", spec.model_dump())
    return spec.shift


def log_kernel_01(spec: IntegrandSpec) -> TKernel:
    """
    scale * ln(x)^p * outer(x) / (a^2 + sign ln^2 x)^m on (0,1) in t = -ln x:

        G(t) = scale * (-t)^p * w0(t) / (a^2 + sign t^2)^m
    """
    a = _require_shift(spec)
    p, m, sign, scale = spec.log_power, spec.denom_power, spec.kernel_sign, spec.scale
    if p == 0 and spec.outer in _VANISHING_DENOMINATOR:
        raise IntegrandSpecError(
            f"outer {spec.outer} without ln(x) in the numerator diverges at x = 1",
            spec.model_dump(),
        )
    weight = outer_weight(spec)
    a2 = a * a
    numerator_sign = -1.0 if p == 1 else 1.0

    def func(t: np.ndarray) -> np.ndarray:
        return scale * numerator_sign * t**p * weight.func(t) / (a2 + sign * t * t) ** m

    def envelope(t: np.ndarray) -> np.ndarray:
        return abs(scale) * t**p / np.abs(a2 + sign * t * t) ** m

    if sign > 0:
        return TKernel(
            func=func,
            envelope=envelope,
            decay_rate=weight.decay_rate,
            decay_const=weight.decay_const,
            monotone_from=max(1.0, a),
        )

    # a^2 - t^2 = (a - t)(a + t): keep h(t) = G(t) (a - t)^m regular at the pole
    def regular_part(t: np.ndarray) -> np.ndarray:
        return scale * numerator_sign * t**p * weight.func(t) / (a + t) ** m

    return TKernel(
        func=func,
        envelope=envelope,
        decay_rate=weight.decay_rate,
        decay_const=weight.decay_const,
        monotone_from=max(1.0, 2.0 * a),
        pole=a,
        regular_part=regular_part,
        denom_power=m,
    )


def log_ratio_kernel(spec: IntegrandSpec) -> TKernel:
    """
    ln(((n+1)^2 pi^2 + t^2) / ((n-1)^2 pi^2 + t^2)) * u/(1+u)^2,  u = e^-t.

    For n = 1 the logarithm behaves like ln(4 pi^2 / t^2) at t -> 0.
    """
    if spec.n is None:
        raise IntegrandSpecError("log_ratio_kernel needs an index n", spec.model_dump())
    n = spec.n
    lift = 4.0 * n * math.pi**2
    base = ((n - 1) * math.pi) ** 2
    scale = spec.scale

    def envelope(t: np.ndarray) -> np.ndarray:
        return abs(scale) * np.log1p(lift / (base + t * t))

    def func(t: np.ndarray) -> np.ndarray:
        return scale * np.log1p(lift / (base + t * t)) * _logistic_density(t)

    return TKernel(
        func=func,
        envelope=envelope,
        decay_rate=1.0,
        decay_const=1.0,
        monotone_from=1.0,
        singular_at_zero=(n == 1),
    )


def legendre_kernel(a: float, b: float) -> TKernel:
    """t / ((e^{bt} + 1)(t^2 + a^2)) on (0, inf)."""
    a2 = a * a

    def envelope(t: np.ndarray) -> np.ndarray:
        return t / (t * t + a2)

    def func(t: np.ndarray) -> np.ndarray:
        return envelope(t) * _logistic_tail(b * t)

    return TKernel(
        func=func,
        envelope=envelope,
        decay_rate=b,
        decay_const=1.0,
        monotone_from=max(1.0, a),
    )


def kernel_moment(p: int, m: int, a: float) -> float:
    """
    int_0^inf t^p / (a^2 + t^2)^m dt for the convergent cases.

    Raises:
        IntegrandSpecError: p = 1, m = 1 (logarithmically divergent)
    """
    if p == 0 and m == 1:
        return math.pi / (2.0 * a)
    if p == 0 and m == 2:
        return math.pi / (4.0 * a**3)
    if p == 1 and m == 2:
        return 1.0 / (2.0 * a * a)
    raise IntegrandSpecError(f"int_0^inf t^{p}/(a^2+t^2)^{m} dt diverges")


def is_inversion_symmetric(spec: IntegrandSpec) -> bool:
    """True when (1,inf) maps onto (0,1) with the same t-integrand up to (-1)^p."""
    return spec.family == "log_ratio_kernel" or spec.outer in _INVERSION_SYMMETRIC
