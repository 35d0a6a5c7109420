"""Finite-difference stencils and mesh helpers."""

import math

import numpy as np
import pytest

from logkernel.utils.numeric_utils import (
    backward_difference,
    derivative_5pt,
    geometric_breakpoints,
    graded_breakpoints,
    third_derivative_5pt,
)


@pytest.mark.parametrize("x", [-1.0, 0.0, 1.0, 2.5])
def test_stencils_on_exp(x):
    assert abs(derivative_5pt(np.exp, x, 1e-2) - math.exp(x)) <= 1e-8 * math.exp(x)
    assert abs(third_derivative_5pt(np.exp, x, 1e-2) - math.exp(x)) <= 1e-4 * math.exp(x)


def test_stencils_are_exact_for_low_degree_polynomials():
    def cubic(x):
        return x**3 - 2.0 * x

    assert derivative_5pt(cubic, 2.0, 0.5) == pytest.approx(10.0, abs=1e-12)
    assert third_derivative_5pt(cubic, 2.0, 0.5) == pytest.approx(6.0, abs=1e-11)


def test_backward_difference_of_squares():
    values = np.array([float(k * k) for k in range(5, 9)])
    assert backward_difference(values, 1) == 15.0
    assert backward_difference(values, 2) == 2.0
    assert backward_difference(values, 3) == 0.0


def test_meshes():
    assert geometric_breakpoints(10.0) == [0.0, 1.0, 2.0, 4.0, 8.0, 10.0]
    assert graded_breakpoints(3, 2.0) == [0.25, 0.5, 1.0]
