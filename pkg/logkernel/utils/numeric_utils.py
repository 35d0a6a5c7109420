"""
Numeric helpers shared by the quadrature and series engines.

Functions:
    - derivative_5pt / third_derivative_5pt: central finite-difference stencils
    - backward_difference: j-th backward difference at a point
    - geometric_breakpoints / graded_breakpoints: initial quadrature meshes
"""

import math
from typing import Callable

import numpy as np


EPS = float(np.finfo(float).eps)


def derivative_5pt(f: Callable[[np.ndarray], np.ndarray], x: float, h: float) -> float:
    """First derivative by the 5-point central stencil (O(h^4))."""
    pts = np.array([x - 2 * h, x - h, x + h, x + 2 * h])
    fm2, fm1, fp1, fp2 = f(pts)
    return float((fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h))


def third_derivative_5pt(f: Callable[[np.ndarray], np.ndarray], x: float, h: float) -> float:
    """Third derivative by the 5-point central stencil (O(h^2))."""
    pts = np.array([x - 2 * h, x - h, x + h, x + 2 * h])
    fm2, fm1, fp1, fp2 = f(pts)
    return float((-fm2 + 2 * fm1 - 2 * fp1 + fp2) / (2 * h**3))


def backward_difference(values: np.ndarray, order: int) -> float:
    """
    ``order``-th backward difference at the last entry of ``values``.

    ``values`` holds h(m-order), ..., h(m); the result is (nabla^order h)(m).
    """
    coeffs = [(-1) ** i * math.comb(order, i) for i in range(order + 1)]
    return math.fsum(c * float(values[-1 - i]) for i, c in enumerate(coeffs))


def geometric_breakpoints(upper: float, start: float = 1.0) -> list[float]:
    """0, start, 2*start, 4*start, ... up to (and including) ``upper``."""
    points = [0.0]
    x = start
    while x < upper:
        points.append(x)
        x *= 2.0
    points.append(upper)
    return points


def graded_breakpoints(levels: int, upper: float = 1.0) -> list[float]:
    """upper*2^-levels, ..., upper/4, upper/2 for resolving an endpoint singularity at 0."""
    return [upper * 2.0 ** (-j) for j in range(levels, 0, -1)]
