"""
Adaptive quadrature for log-kernel integrands.

Modules:
    - gauss_kronrod: GK 7/15 panels and the adaptive driver
    - kernels: integrands transformed to t = -ln x with tail data
    - integrals: (0,1), (1,inf), (0,inf) and Legendre integrals
"""

from logkernel.quad.gauss_kronrod import gk15, integrate_adaptive
from logkernel.quad.integrals import (
    integrate_legendre,
    integrate_logkernel_01,
    integrate_logkernel_0inf,
    integrate_logkernel_1inf,
    integrate_spec,
)
from logkernel.quad.kernels import kernel_moment

__all__ = [
    "gk15",
    "integrate_adaptive",
    "integrate_legendre",
    "integrate_logkernel_01",
    "integrate_logkernel_0inf",
    "integrate_logkernel_1inf",
    "integrate_spec",
    "kernel_moment",
]
