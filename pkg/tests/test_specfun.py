"""Special functions against scipy.special and exact values."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate, special

from logkernel.exceptions import BernoulliOverflowError, DomainError, PoleError, UnsupportedOrderError
from logkernel.specfun import (
    EULER_GAMMA,
    K_MAX,
    aux_f,
    aux_g,
    bernoulli_even,
    bernoulli_even_from_zeta,
    bernoulli_number,
    bernoulli_table,
    ci,
    digamma,
    dilog,
    ei_imag,
    gamma_ln,
    kummer_ln_gamma,
    kummer_ln_gamma_with_error,
    kummer_trig_integral,
    odd_symbol_bernoulli,
    polygamma,
    si_lower,
    si_upper,
    sici_kpi,
    tanh_saalschuetz,
    tanh_saalschuetz_with_error,
    zeta,
)


SICI_POINTS = [1e-3, 0.1, 1.0, 2.5, 4.0, math.pi, 7.5, 10.0, 30.0, 63.9, 64.0, 100.0, 1e3, 1e4]


def close(value: float, expected: float, tol: float) -> bool:
    return abs(value - expected) <= tol * max(1.0, abs(expected))


@pytest.mark.parametrize("x", SICI_POINTS)
def test_sine_and_cosine_integrals_match_scipy(x):
    si_ref, ci_ref = special.sici(x)
    assert close(si_upper(x), si_ref, 1e-12)
    assert close(si_lower(x), si_ref - math.pi / 2, 1e-12)
    assert close(ci(x), ci_ref, 1e-12)


@pytest.mark.parametrize("x", [0.5, 3.0, 20.0, 80.0])
def test_auxiliary_functions_definition(x):
    si_ref, ci_ref = special.sici(x)
    si_low = si_ref - math.pi / 2
    assert close(aux_f(x), ci_ref * math.sin(x) - si_low * math.cos(x), 1e-11)
    assert close(aux_g(x), -ci_ref * math.cos(x) - si_low * math.sin(x), 1e-11)


def test_sici_at_integer_multiples_of_pi():
    k = np.arange(1, 200)
    si_vals, ci_vals = sici_kpi(k)
    si_ref, ci_ref = special.sici(k * math.pi)
    np.testing.assert_allclose(si_vals, si_ref - math.pi / 2, rtol=0, atol=1e-12)
    np.testing.assert_allclose(ci_vals, ci_ref, rtol=0, atol=1e-12)


def test_ei_on_imaginary_axis():
    pair = ei_imag(math.pi)
    assert close(pair.re, ci(math.pi), 1e-15)
    assert close(pair.im, si_upper(math.pi) + math.pi / 2, 1e-15)
    assert pair.conjugate().im == -pair.im


@pytest.mark.parametrize("fn,x", [(ci, 0.0), (ci, -1.0), (si_upper, -0.5), (aux_f, 0.0), (ei_imag, 0.0)])
def test_trig_integral_domain_errors(fn, x):
    with pytest.raises(DomainError):
        fn(x)


def test_digamma_at_one_is_minus_gamma():
    assert abs(digamma(1.0) + EULER_GAMMA) < 1e-12


@pytest.mark.parametrize("x", [0.1, 0.25, 0.5, 1.0, 1.5, 3.7, 9.99, 10.0, 50.0, -0.5, -2.3])
def test_digamma_matches_scipy(x):
    assert close(digamma(x), special.psi(x), 1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, -3.0])
def test_digamma_poles(x):
    with pytest.raises(PoleError):
        digamma(x)


@pytest.mark.parametrize("order", [1, 2])
@pytest.mark.parametrize("x", [0.25, 0.5, 1.0, 2.0, 7.3, 25.0])
def test_polygamma_matches_scipy(order, x):
    assert close(polygamma(order, x), float(special.polygamma(order, x)), 1e-12)


def test_polygamma_exact_values():
    assert close(polygamma(1, 1.0), math.pi**2 / 6, 1e-14)
    assert close(polygamma(1, 0.5), math.pi**2 / 2, 1e-14)
    assert close(polygamma(2, 1.0), -2 * zeta(3.0), 1e-13)


def test_polygamma_errors():
    with pytest.raises(UnsupportedOrderError):
        polygamma(3, 1.0)
    with pytest.raises(DomainError):
        polygamma(1, -0.5)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 4.2, 100.0])
def test_gamma_ln_matches_scipy(x):
    assert close(gamma_ln(x), special.gammaln(x), 1e-13)


def test_gamma_ln_domain():
    with pytest.raises(DomainError):
        gamma_ln(0.0)


@pytest.mark.parametrize("s", [1.5, 2.0, 3.0, 4.0, 7.0, 20.0])
def test_zeta_matches_scipy(s):
    assert close(zeta(s), special.zeta(s, 1), 1e-13)


@pytest.mark.parametrize("x", [0.0, 0.2, 0.5, 0.7, 0.9, 1.0])
def test_dilog_matches_scipy(x):
    # scipy's spence(z) is Li2(1 - z)
    assert close(dilog(x), special.spence(1.0 - x), 1e-13)


def test_dilog_domain():
    with pytest.raises(DomainError):
        dilog(-0.3)


def test_bernoulli_numbers_exact():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(12) == Fraction(-691, 2730)


@pytest.mark.parametrize("k", range(1, 9))
def test_bernoulli_zeta_relation(k):
    exact = float(bernoulli_number(2 * k))
    assert close(bernoulli_even_from_zeta(k), exact, 1e-12)
    assert bernoulli_even(k) == exact


def test_bernoulli_conventions():
    modern = bernoulli_table("modern")
    archaic = bernoulli_table("archaic")
    assert modern.k_max == archaic.k_max == K_MAX
    assert modern.get(2) == -1 / 30
    assert archaic.get(2) == 1 / 30
    assert odd_symbol_bernoulli(1, "modern") == 0.5
    assert odd_symbol_bernoulli(3, "modern") == 0.0
    assert odd_symbol_bernoulli(3, "archaic") == abs(float(bernoulli_number(6)))


def test_bernoulli_overflow_and_domain():
    with pytest.raises(BernoulliOverflowError):
        bernoulli_even(K_MAX + 1)
    with pytest.raises(BernoulliOverflowError):
        odd_symbol_bernoulli(K_MAX + 1, "archaic")
    with pytest.raises(DomainError):
        bernoulli_even(0)


@pytest.mark.parametrize("x", [-3.0, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0])
def test_saalschuetz_expansion_of_tanh(x):
    assert abs(tanh_saalschuetz(x) - math.tanh(x)) <= 1e-10


@pytest.mark.parametrize("y", [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
def test_kummer_series_of_ln_gamma(y):
    assert abs(kummer_ln_gamma(y) - special.gammaln(y)) <= 1e-6


@pytest.mark.parametrize("k", range(1, 8))
def test_kummer_trig_integral_exact_value(k):
    def integrand(y):
        return math.sin(2 * math.pi * k * y) * math.cos(4 * math.pi * y)

    upper, _ = integrate.quad(integrand, 0.75, 1.0, epsabs=1e-14)
    lower, _ = integrate.quad(integrand, 0.25, 0.5, epsabs=1e-14)
    assert abs(kummer_trig_integral(k) - (upper - lower)) <= 1e-12


@pytest.mark.parametrize("x,expected", [(1.0, 0.0), (0.5, 0.5 * math.log(math.pi)), (5.0, math.log(24.0))])
def test_gamma_ln_exact_values(x, expected):
    assert abs(gamma_ln(x) - expected) <= 1e-13


def test_digamma_exact_values():
    assert close(digamma(0.5), -EULER_GAMMA - 2 * math.log(2.0), 1e-12)
    assert close(digamma(0.75) - digamma(0.25), math.pi, 1e-12)
    assert close(polygamma(2, 0.5), -14 * zeta(3.0), 1e-11)


@pytest.mark.parametrize("z", [0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.9])
def test_digamma_reflection(z):
    assert abs(digamma(1 - z) - digamma(z) - math.pi / math.tan(math.pi * z)) <= 1e-11


@pytest.mark.parametrize("a", [0.5, 1.0, math.pi, 2 * math.pi, 10.0])
def test_digamma_duplication(a):
    r = a / (2 * math.pi)
    lhs = digamma(a / math.pi)
    rhs = 0.5 * digamma(0.5 + r) + 0.5 * digamma(r) + math.log(2.0)
    assert abs(lhs - rhs) <= 1e-11


@pytest.mark.parametrize("x", [0.3, 1.7, 4.0, 12.5])
def test_recurrences(x):
    assert abs(digamma(x + 1) - digamma(x) - 1 / x) <= 1e-11 * max(1.0, 1 / x)
    assert abs(polygamma(1, x + 1) - polygamma(1, x) + 1 / x**2) <= 1e-11 * max(1.0, 1 / x**2)


def test_sine_integral_limits():
    assert si_upper(0.0) == 0.0
    assert abs(si_lower(1e6)) <= 2e-6
    assert abs(dilog(0.5) - (math.pi**2 / 12 - math.log(2.0) ** 2 / 2)) <= 1e-13
    assert abs(dilog(1.0) - math.pi**2 / 6) <= 1e-13


def test_saalschuetz_partial_sums_increase():
    values = [tanh_saalschuetz(1.5, terms, tail_corrected=False) for terms in (10, 100, 1000)]
    assert values == sorted(values)
    assert values[-1] < math.tanh(1.5)


@pytest.mark.parametrize("y", [1e-4, 1e-3, 1e-2, 1 - 1e-3])
@pytest.mark.parametrize("terms", [10, 1000])
def test_kummer_series_near_the_endpoints(y, terms):
    value, error = kummer_ln_gamma_with_error(y, terms)
    assert abs(value - special.gammaln(y)) <= error
    assert error <= 1e-9


@pytest.mark.parametrize("y", [0.1, 0.25, 0.5, 0.9])
def test_kummer_error_bound_holds(y):
    value, error = kummer_ln_gamma_with_error(y)
    assert value == kummer_ln_gamma(y)
    assert abs(value - special.gammaln(y)) <= error <= 1e-9


def test_kummer_error_grows_when_the_budget_is_capped():
    value, error = kummer_ln_gamma_with_error(1e-8, 10)
    assert math.isfinite(value)
    assert abs(value - special.gammaln(1e-8)) <= error
    assert error > 1e-9


@pytest.mark.parametrize("x", [-3.0, 0.5, 1.0, 2.0, 10.0])
def test_saalschuetz_error_bound_holds(x):
    value, error = tanh_saalschuetz_with_error(x)
    assert abs(value - math.tanh(x)) <= error <= 1e-13
