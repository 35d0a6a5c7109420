"""Adaptive quadrature and the log-kernel integrators."""

import math

import numpy as np
import pytest
from scipy import integrate, special

from logkernel.exceptions import IntegrandSpecError
from logkernel.models.catalog import IntegrandSpec
from logkernel.models.quadrature import QuadConfig
from logkernel.quad import (
    gk15,
    integrate_adaptive,
    integrate_legendre,
    integrate_logkernel_01,
    integrate_logkernel_0inf,
    integrate_logkernel_1inf,
    integrate_spec,
    kernel_moment,
)
from logkernel.specfun import ZETA2, ZETA3


def test_gk15_is_exact_for_polynomials():
    value, error = gk15(lambda x: x**3 - 2 * x, 0.0, 2.0)
    assert abs(value - 0.0) < 1e-14
    assert error < 1e-12


def test_integrate_adaptive_smooth_function():
    result = integrate_adaptive(np.sin, 0.0, math.pi)
    assert abs(result.value - 2.0) < 1e-12
    assert result.converged


def test_integrate_adaptive_with_breakpoints():
    result = integrate_adaptive(np.abs, -1.0, 2.0, breakpoints=[0.0])
    assert abs(result.value - 2.5) < 1e-14


def test_integrate_adaptive_reports_budget_exhaustion():
    cfg = QuadConfig(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=2)
    result = integrate_adaptive(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, cfg)
    assert not result.converged
    assert result.subdivisions_used <= 3


@pytest.mark.parametrize("lo,hi", [(1.0, 1.0), (2.0, 1.0), (0.0, math.inf)])
def test_integrate_adaptive_rejects_bad_limits(lo, hi):
    with pytest.raises(ValueError):
        integrate_adaptive(np.sin, lo, hi)


def _scipy_01(a: float, p: int, m: int) -> float:
    def f(x):
        lx = math.log(x)
        return lx**p / ((a * a + lx * lx) ** m * (1.0 + x))

    value, _ = integrate.quad(f, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=500)
    return value


@pytest.mark.parametrize("a", [0.5, 1.0, math.pi, 5.0])
@pytest.mark.parametrize("p", [0, 1])
@pytest.mark.parametrize("m", [1, 2])
def test_log_kernel_on_unit_interval_matches_scipy(a, p, m, qcfg):
    spec = IntegrandSpec(shift=a, log_power=p, denom_power=m)
    result = integrate_logkernel_01(spec, qcfg)
    assert result.converged
    assert abs(result.value - _scipy_01(a, p, m)) <= 1e-9


@pytest.mark.parametrize("a", [0.5, 1.0, math.pi, 2 * math.pi, 10.0])
def test_full_line_integral_is_pi_over_2a(a, qcfg):
    result = integrate_logkernel_0inf(IntegrandSpec(shift=a, interval="0_inf"), qcfg)
    assert abs(result.value - math.pi / (2 * a)) <= 1e-10
    assert result.error_estimate <= 1e-10


@pytest.mark.parametrize("interval", ["0_1", "1_inf"])
def test_both_halves_equal_one_over_24(interval, qcfg):
    spec = IntegrandSpec(shift=math.pi, outer="inv_1px_sq", interval=interval)
    assert abs(integrate_spec(spec, qcfg).value - 1 / 24) <= 1e-10


@pytest.mark.parametrize("interval", ["0_1", "1_inf"])
def test_squared_kernel_halves_give_zeta_values(interval, qcfg):
    spec = IntegrandSpec(shift=math.pi, denom_power=2, outer="inv_1px_sq", interval=interval)
    expected = (ZETA3 + ZETA2) / (8 * math.pi**4)
    assert abs(integrate_spec(spec, qcfg).value - expected) <= 1e-10


@pytest.mark.parametrize("outer", ["inv_1px_sq", "inv_1px2", "inv_1px_sqrtx"])
@pytest.mark.parametrize("p", [0, 1])
def test_inversion_symmetry(outer, p, qcfg):
    spec = IntegrandSpec(shift=2.0, outer=outer, log_power=p)
    lower = integrate_logkernel_01(spec, qcfg)
    upper = integrate_logkernel_1inf(spec.with_interval("1_inf"), qcfg)
    assert upper.value == pytest.approx((-1) ** p * lower.value, abs=1e-15)


@pytest.mark.parametrize("a", [0.5, 2.0, 7.0])
def test_split_additivity(a, qcfg):
    spec = IntegrandSpec(shift=a, denom_power=2)
    whole = integrate_logkernel_0inf(spec.with_interval("0_inf"), qcfg)
    lower = integrate_logkernel_01(spec, qcfg)
    upper = integrate_logkernel_1inf(spec.with_interval("1_inf"), qcfg)
    assert abs(whole.value - (lower.value + upper.value)) <= 1e-14
    assert abs(whole.value - math.pi / (4 * a**3)) <= 1e-10


def test_upper_half_line_matches_scipy(qcfg):
    a = 1.5

    # x = e^t, dx = e^t dt keeps the integrand smooth
    def f(t):
        return 1.0 / ((a * a + t * t) * (1.0 + math.exp(-t)))

    expected, _ = integrate.quad(f, 0.0, math.inf, epsabs=1e-14, epsrel=1e-13, limit=500)
    result = integrate_logkernel_1inf(IntegrandSpec(shift=a, interval="1_inf"), qcfg)
    assert abs(result.value - expected) <= 1e-9


def test_alternating_monomial_outer(qcfg):
    a, k = math.pi, 3

    def f(x):
        lx = math.log(x)
        return (-x) ** k * lx / (a * a + lx * lx)

    expected, _ = integrate.quad(f, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=500)
    spec = IntegrandSpec(shift=a, log_power=1, outer="alternating_monomial", power=k)
    assert abs(integrate_logkernel_01(spec, qcfg).value - expected) <= 1e-10
    # -Ci((k+1) pi)
    assert abs(integrate_logkernel_01(spec, qcfg).value + special.sici(4 * math.pi)[1]) <= 1e-10


@pytest.mark.parametrize("a,b", [(math.pi, 1.0), (1.0, 2.0), (5.0, 0.5)])
def test_legendre_integral(a, b, qcfg):
    r = a * b / (2 * math.pi)
    expected = 0.5 * special.psi(0.5 + r) - 0.5 * math.log(r)
    assert abs(integrate_legendre(a, b, qcfg).value - expected) <= 1e-10


@pytest.mark.parametrize("q", [1.0, math.pi])
def test_principal_value_kernel(q, qcfg):
    spec = IntegrandSpec(shift=q, log_power=1, outer="inv_1mx", kernel_sign=-1)
    result = integrate_logkernel_01(spec, qcfg)
    assert result.regularization == "principal_value"

    # G(t) = h(t) / (q - t) with h(t) = -t / ((e^t - 1)(q + t))
    def h(t):
        if t == 0.0:
            return -1.0 / q
        return -t / (math.expm1(t) * (q + t))

    pv, _ = integrate.quad(h, 0.0, 60.0, weight="cauchy", wvar=q, epsabs=1e-13, epsrel=1e-13, limit=500)
    assert result.converged
    assert result.error_estimate <= 1e-11
    assert abs(result.value - (-pv)) <= 1e-10


@pytest.mark.parametrize("q", [1.0, math.pi])
def test_finite_part_kernel_converges(q, qcfg):
    spec = IntegrandSpec(shift=q, log_power=1, outer="inv_1mx", denom_power=2, kernel_sign=-1)
    result = integrate_logkernel_01(spec, qcfg)
    assert result.regularization == "finite_part"
    assert result.converged

    # With g fixed, FP int g/(s - t)^2 dt = d/ds int g(t)/(t - s) dt (Cauchy weight)
    def g(t):
        if t == 0.0:
            return -1.0 / (q * q)
        return -t / (math.expm1(t) * (q + t) ** 2)

    def cauchy(s):
        return integrate.quad(g, 0.0, 60.0, weight="cauchy", wvar=s, epsabs=1e-13, epsrel=1e-13, limit=500)[0]

    d = 5e-3
    fp = (cauchy(q - 2 * d) - 8 * cauchy(q - d) + 8 * cauchy(q + d) - cauchy(q + 2 * d)) / (12 * d)
    assert abs(result.value - fp) <= 1e-8


def test_finite_part_kernel_is_flagged_and_stable():
    spec = IntegrandSpec(shift=2.0, log_power=1, outer="inv_1mx", denom_power=2, kernel_sign=-1)
    coarse = integrate_logkernel_01(spec, QuadConfig(abs_tol=1e-10, rel_tol=1e-10))
    fine = integrate_logkernel_01(spec, QuadConfig())
    assert fine.regularization == "finite_part"
    assert abs(coarse.value - fine.value) <= 1e-7


def test_kernel_moment():
    assert kernel_moment(0, 1, 2.0) == pytest.approx(math.pi / 4)
    assert kernel_moment(0, 2, 1.0) == pytest.approx(math.pi / 4)
    assert kernel_moment(1, 2, 1.0) == pytest.approx(0.5)
    with pytest.raises(IntegrandSpecError):
        kernel_moment(1, 1, 1.0)


def test_unintegrable_requests_raise(qcfg):
    with pytest.raises(IntegrandSpecError):
        # 1/(1-x) without ln x diverges at x = 1
        integrate_logkernel_01(IntegrandSpec(shift=1.0, outer="inv_1mx"), qcfg)
    with pytest.raises(IntegrandSpecError):
        integrate_logkernel_1inf(IntegrandSpec(shift=1.0, outer="inv_1mx", log_power=1, interval="1_inf"), qcfg)
    with pytest.raises(IntegrandSpecError):
        integrate_logkernel_01(IntegrandSpec(outer="inv_1px"), qcfg)
