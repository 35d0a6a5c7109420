"""
Utility Modules for logkernel

Modules:
    - numeric_utils: finite-difference stencils and mesh helpers
"""

from logkernel.utils.numeric_utils import (
    EPS,
    backward_difference,
    derivative_5pt,
    geometric_breakpoints,
    graded_breakpoints,
    third_derivative_5pt,
)

__all__ = [
    "EPS",
    "backward_difference",
    "derivative_5pt",
    "geometric_breakpoints",
    "graded_breakpoints",
    "third_derivative_5pt",
]
