"""
Term generators for the right-hand-side series.

Each SeriesTerm evaluates its terms on an integer index array and declares
the summation modes that are valid for it. Terms with a ``model`` can be
summed with the tail-corrected engine (the model is the same formula on
real x); terms with a ``length`` are finite sums.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from logkernel.exceptions import SeriesError, UnknownSeriesError
from logkernel.models.series import ParamValue, SumMode
from logkernel.specfun.numbers import K_MAX, bernoulli_even, odd_symbol_bernoulli, zeta
from logkernel.specfun.trig_integrals import aux_arrays, sici_kpi


TermFn = Callable[[np.ndarray, dict[str, ParamValue]], np.ndarray]
LengthFn = Callable[[dict[str, ParamValue]], int]

ALTERNATING_MODES: tuple[SumMode, ...] = ("alternating_accelerated", "cesaro_c1")


@dataclass(frozen=True)
class SeriesTerm:
    """
    A registered term generator.

    Attributes:
        term_id: Registry key
        description: Formula shown in listings
        terms: Vectorised k -> t_k
        modes: Admissible summation modes
        start: First index
        params: Required parameter names
        defaults: Default parameter values
        model: Real-variable tail model for tail_corrected
        length: Number of terms for finite series
    """

    term_id: str
    description: str
    terms: TermFn
    modes: tuple[SumMode, ...]
    start: int = 1
    params: tuple[str, ...] = ()
    defaults: dict[str, ParamValue] = field(default_factory=dict)
    model: Optional[TermFn] = None
    length: Optional[LengthFn] = None

    def resolve(self, params: dict[str, ParamValue]) -> dict[str, ParamValue]:
        """Defaults overlaid with ``params``; missing required names raise."""
        merged = {**self.defaults, **params}
        missing = [name for name in self.params if name not in merged]
        if missing:
            raise SeriesError(
                f"Series '{self.term_id}' needs parameters {missing}",
                {"term_id": self.term_id, "given": sorted(params)},
            )
        return merged

    def evaluate(self, offset: int, count: int, params: dict[str, ParamValue]) -> np.ndarray:
        """Terms number offset .. offset+count-1 (0-based from ``start``)."""
        k = np.arange(self.start + offset, self.start + offset + count, dtype=float)
        return np.asarray(self.terms(k, params), dtype=float)

    def finite_length(self, params: dict[str, ParamValue]) -> Optional[int]:
        return None if self.length is None else self.length(params)


class TermRegistry:
    """
    Registry of series term generators.

    Allows registration and lookup of terms by id.
    """

    def __init__(self):
        self._terms: dict[str, SeriesTerm] = {}

    def register(self, term: SeriesTerm) -> None:
        """Register a term generator."""
        self._terms[term.term_id] = term

    def get(self, term_id: str) -> SeriesTerm:
        """
        Get a term generator by id.

        Raises:
            UnknownSeriesError: id not registered
        """
        term = self._terms.get(term_id)
        if term is None:
            raise UnknownSeriesError(term_id, self.list_series())
        return term

    def list_series(self) -> list[str]:
        """List all registered term ids."""
        return sorted(self._terms)

    def __contains__(self, term_id: str) -> bool:
        return term_id in self._terms

    def __getitem__(self, term_id: str) -> SeriesTerm:
        return self.get(term_id)


# ===========================================
# Term formulas
# ===========================================


def _alternating_sign(k: np.ndarray) -> np.ndarray:
    """(-1)^(k+1)."""
    return np.where(np.mod(k, 2.0) == 1.0, 1.0, -1.0)


def _telescoping(k, p):
    return 1.0 / (k * (k + 1.0))


def _alternating_power(k, p):
    return _alternating_sign(k) / k ** float(p["s"])


def _grandi(k, p):
    return _alternating_sign(k)


def _si_kpi(k, p):
    return sici_kpi(k)[0]


def _k_si_kpi(k, p):
    return k * sici_kpi(k)[0]


def _ci_kpi(k, p):
    return sici_kpi(k)[1]


def _k_ci_kpi(k, p):
    return k * sici_kpi(k)[1]


def _si_ci_shift(k, p):
    # (-1)^k [si(ak) cos(ak) - Ci(ak) sin(ak)] = (-1)^(k+1) f(ak)
    f, _ = aux_arrays(float(p["a"]) * k)
    return _alternating_sign(k) * f


def _saalschuetz_log(k, p):
    a = float(p["a"])
    odd = 2.0 * k + 1.0
    return (math.log(a) - math.log(math.pi) - np.log(odd)) / (a * a - (odd * math.pi) ** 2)


def _saalschuetz_log_sq(k, p):
    a = float(p["a"])
    odd_pi = (2.0 * k + 1.0) * math.pi
    return (np.log(odd_pi) - math.log(a)) / (odd_pi**2 - a * a) ** 2


def _log_odd_over_k_k1(k, p):
    return np.log(2.0 * k + 1.0) / (k * (k + 1.0))


def _log_odd_over_2km1_2kp3(k, p):
    return np.log(2.0 * k + 1.0) / ((2.0 * k - 1.0) * (2.0 * k + 3.0))


def _log_odd_over_k2_k12(k, p):
    return np.log(2.0 * k + 1.0) / (k * k * (k + 1.0) ** 2)


def _bernoulli_pi(k, p):
    out = np.empty_like(k)
    for i, kk in enumerate(k.astype(int).tolist()):
        # pi^2k / (2k)! stays finite for k <= K_MAX
        weight = math.pi ** (2 * kk) / math.factorial(2 * kk)
        out[i] = (-1) ** kk * bernoulli_even(kk) * weight / (kk * (2 * kk - 1))
    return out


def _zeta_over_2km1_4k(k, p):
    return np.array([zeta(2.0 * kk) / ((2.0 * kk - 1.0) * 4.0**kk) for kk in k.tolist()])


def _zeta_over_k_4k(k, p):
    return np.array([zeta(2.0 * kk) / (kk * 4.0**kk) for kk in k.tolist()])


def _table_bernoulli(k, p):
    """
    c(n) B_(2n+1) (rho pi / a)^(2n) with c(n) by form:
    0 -> (-1)^(n-1)/(n+1), 1 -> 1, 2 -> (-1)^(n-1).
    """
    a = float(p["a"])
    ratio = float(p["rho"]) * math.pi / a
    form = int(p["form"])
    convention = "archaic" if int(p["archaic"]) else "modern"
    out = np.empty_like(k)
    for i, n in enumerate(k.astype(int).tolist()):
        sign = -1.0 if n % 2 == 0 else 1.0  # (-1)^(n-1)
        if form == 0:
            coeff = sign / (n + 1)
        elif form == 1:
            coeff = 1.0
        else:
            coeff = sign
        symbol = odd_symbol_bernoulli(2 * n + 1, convention)
        out[i] = coeff * symbol * ratio ** (2 * n) if symbol else 0.0
    return out


def _table_bernoulli_length(p):
    # Symbol B_(2n+1) needs |B_(4n+2)| under the archaic reading
    return (K_MAX + 1) // 2


def build_term_registry() -> TermRegistry:
    """Registry with every term generator used by the identity catalog."""
    registry = TermRegistry()
    for term in (
        SeriesTerm(
            "telescoping", "1/(k(k+1))", _telescoping,
            modes=("direct", "tail_corrected", "cesaro_c1"), model=_telescoping,
        ),
        SeriesTerm(
            "alternating_power", "(-1)^(k+1)/k^s", _alternating_power,
            modes=("direct",) + ALTERNATING_MODES, params=("s",), defaults={"s": 1},
        ),
        SeriesTerm("grandi", "(-1)^(k+1)", _grandi, modes=ALTERNATING_MODES),
        SeriesTerm("si_kpi", "si(k pi)", _si_kpi, modes=ALTERNATING_MODES),
        SeriesTerm("k_si_kpi", "k si(k pi)", _k_si_kpi, modes=ALTERNATING_MODES),
        SeriesTerm("ci_kpi", "Ci(k pi)", _ci_kpi, modes=("direct",) + ALTERNATING_MODES),
        SeriesTerm("k_ci_kpi", "k Ci(k pi)", _k_ci_kpi, modes=ALTERNATING_MODES),
        SeriesTerm(
            "si_ci_shift", "(-1)^k [si(ak) cos(ak) - Ci(ak) sin(ak)]", _si_ci_shift,
            modes=ALTERNATING_MODES, params=("a",),
        ),
        SeriesTerm(
            "saalschuetz_log", "(ln a - ln pi - ln(2k+1)) / (a^2 - (2k+1)^2 pi^2)",
            _saalschuetz_log, modes=("direct", "tail_corrected"), start=0,
            params=("a",), model=_saalschuetz_log,
        ),
        SeriesTerm(
            "saalschuetz_log_sq", "(ln((2k+1) pi) - ln a) / ((2k+1)^2 pi^2 - a^2)^2",
            _saalschuetz_log_sq, modes=("direct", "tail_corrected"), start=0,
            params=("a",), model=_saalschuetz_log_sq,
        ),
        SeriesTerm(
            "log_odd_over_k_k1", "ln(2k+1) / (k(k+1))", _log_odd_over_k_k1,
            modes=("direct", "tail_corrected"), model=_log_odd_over_k_k1,
        ),
        SeriesTerm(
            "log_odd_over_2km1_2kp3", "ln(2k+1) / ((2k-1)(2k+3))", _log_odd_over_2km1_2kp3,
            modes=("direct", "tail_corrected"), model=_log_odd_over_2km1_2kp3,
        ),
        SeriesTerm(
            "log_odd_over_k2_k12", "ln(2k+1) / (k^2 (k+1)^2)", _log_odd_over_k2_k12,
            modes=("direct", "tail_corrected"), model=_log_odd_over_k2_k12,
        ),
        SeriesTerm(
            "bernoulli_pi", "(-1)^k pi^2k B_2k / ((2k)! k (2k-1))", _bernoulli_pi,
            modes=("direct",), length=lambda p: K_MAX,
        ),
        SeriesTerm(
            "zeta_over_2km1_4k", "zeta(2k) / ((2k-1) 4^k)", _zeta_over_2km1_4k,
            modes=("direct",), length=lambda p: K_MAX,
        ),
        SeriesTerm(
            "zeta_over_k_4k", "zeta(2k) / (k 4^k)", _zeta_over_k_4k,
            modes=("direct",), length=lambda p: K_MAX,
        ),
        SeriesTerm(
            "table_bernoulli", "c(n) B_(2n+1) (rho pi / a)^(2n)", _table_bernoulli,
            modes=("direct", "asymptotic_optimal"), start=0,
            params=("a", "rho", "form", "archaic"), defaults={"rho": 2, "form": 1, "archaic": 0},
            length=_table_bernoulli_length,
        ),
    ):
        registry.register(term)
    return registry


term_registry = build_term_registry()


def list_series() -> list[str]:
    """Registered term ids."""
    return term_registry.list_series()
