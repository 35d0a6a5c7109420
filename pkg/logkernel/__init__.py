"""
logkernel - numerical verification of log-kernel integral identities.

Special functions, adaptive quadrature for integrands with a^2 + ln^2 x
kernels, series summation engines and a registry of identities to check.
"""

__version__ = "0.1.0"
