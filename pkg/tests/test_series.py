"""Term registry and summation engines."""

import math

import numpy as np
import pytest

from logkernel.exceptions import ModeMismatchError, SeriesError, UnknownSeriesError
from logkernel.models.series import SeriesSpec
from logkernel.series import SeriesTerm, TermRegistry, list_series, sum_series
from logkernel.series.terms import ALTERNATING_MODES
from logkernel.specfun import EULER_GAMMA


def summed(term_id: str, mode: str, **fields):
    return sum_series(SeriesSpec(term_id=term_id, mode=mode, **fields))


@pytest.mark.parametrize(
    "s,expected",
    [(1, math.log(2.0)), (2, math.pi**2 / 12)],
)
def test_alternating_power_accelerated(s, expected):
    result = summed("alternating_power", "alternating_accelerated", params={"s": s})
    assert abs(result.value - expected) <= 1e-9
    assert result.converged
    assert result.mode_used == "alternating_accelerated"


def test_alternating_power_defaults_to_s_one():
    result = summed("alternating_power", "alternating_accelerated")
    assert abs(result.value - math.log(2.0)) <= 1e-9


def test_telescoping_tail_corrected():
    result = summed("telescoping", "tail_corrected")
    assert abs(result.value - 1.0) <= 1e-10
    assert result.converged
    assert result.notes == ()


def test_telescoping_direct_stops_at_tolerance():
    result = summed("telescoping", "direct", tol=1e-3)
    assert result.converged
    assert result.error_estimate <= 1e-3
    assert abs(result.value - 1.0) <= 2e-3


def test_grandi_cesaro_sum():
    result = summed("grandi", "cesaro_c1", max_terms=1000)
    assert abs(result.value - 0.5) <= 1e-5
    assert result.mode_used == "cesaro_c1"


def test_grandi_has_no_ordinary_sum():
    with pytest.raises(ModeMismatchError):
        summed("grandi", "direct")


def test_unknown_series():
    with pytest.raises(UnknownSeriesError):
        summed("no_such_series", "direct")


def test_missing_parameter():
    with pytest.raises(SeriesError):
        summed("si_ci_shift", "alternating_accelerated")


def test_cosine_integral_series():
    result = summed("ci_kpi", "alternating_accelerated")
    assert abs(result.value - (math.log(2.0) / 2 - EULER_GAMMA / 2)) <= 1e-8


@pytest.mark.slow
def test_k_si_kpi_cesaro_sum():
    result = summed("k_si_kpi", "cesaro_c1", max_terms=100_000)
    assert abs(result.value - math.pi / 24) <= 1e-4 * math.pi


def test_finite_zeta_series():
    result = summed("zeta_over_k_4k", "direct")
    assert abs(result.value - math.log(math.pi / 2)) <= 1e-12
    assert result.terms_used == 40


@pytest.mark.parametrize("mode", ["direct", "asymptotic_optimal"])
def test_table_series_modern_reading_keeps_only_b1(mode):
    result = summed("table_bernoulli", mode, params={"a": 1.0})
    assert result.value == 0.5


def test_non_alternating_terms_fall_back_to_direct():
    registry = TermRegistry()
    registry.register(SeriesTerm("geometric", "2^-k", lambda k, p: 0.5**k, modes=ALTERNATING_MODES))
    result = sum_series(SeriesSpec(term_id="geometric", mode="alternating_accelerated"), registry)
    assert abs(result.value - 1.0) <= 1e-14
    assert result.mode_used == "direct"
    assert "fallback_direct: terms do not alternate" in result.notes


def test_tail_corrected_needs_a_model():
    registry = TermRegistry()
    registry.register(SeriesTerm("plain", "1/k^2", lambda k, p: 1.0 / k**2, modes=("tail_corrected",)))
    with pytest.raises(ModeMismatchError):
        sum_series(SeriesSpec(term_id="plain", mode="tail_corrected"), registry)


def test_asymptotic_series_truncates_at_smallest_term():
    def factorial_terms(k, p):
        return np.array([math.factorial(int(kk)) / 8.5**kk for kk in k.tolist()])

    registry = TermRegistry()
    registry.register(
        SeriesTerm("factorial", "k!/8.5^k", factorial_terms, modes=("asymptotic_optimal",), start=0)
    )
    result = sum_series(SeriesSpec(term_id="factorial", mode="asymptotic_optimal", max_terms=50), registry)
    expected = math.fsum(math.factorial(k) / 8.5**k for k in range(8))
    assert result.value == pytest.approx(expected, rel=1e-14)
    assert result.error_estimate == pytest.approx(math.factorial(8) / 8.5**8, rel=1e-14)
    assert result.terms_used == 8
    assert result.notes == ("truncated before index 8",)


def test_registry_listing():
    names = list_series()
    assert names == sorted(names)
    for term_id in ("telescoping", "grandi", "k_si_kpi", "table_bernoulli"):
        assert term_id in names


def test_alternating_zeta_three():
    result = summed("alternating_power", "alternating_accelerated", params={"s": 3})
    assert abs(result.value - 0.75 * 1.2020569031595942) <= 1e-10


def test_cesaro_agrees_with_an_ordinary_sum():
    result = summed("telescoping", "cesaro_c1", max_terms=100_000)
    assert abs(result.value - 1.0) <= 1e-4
