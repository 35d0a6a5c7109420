"""
Identity registry.

Rows:
    main-01 .. main-19       main results
    lemma-*                  identities used along the derivations
    remark-n                 the log-ratio family, n = 1..5
    appendix-01 .. 17        Bierens de Haan table 129 entries (parameter q read as a)

The registry is built once and is immutable; ids and order are stable.
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional

from logkernel.config import NumericDefaults
from logkernel.exceptions import IdentityNotFoundError
from logkernel.models.catalog import (
    ClosedForm,
    ComputedLhs,
    Identity,
    IntegrandSpec,
    ParamDomain,
    RationalConstant,
    SeriesExpr,
)
from logkernel.models.expressions import (
    A,
    B,
    GAMMA,
    K,
    LN2,
    N,
    PI,
    S,
    X,
    Y,
    Z,
    Ci,
    Expr,
    Si,
    aux_f,
    aux_g,
    cot,
    factorial,
    gamma_ln,
    kummer_trig,
    ln,
    psi,
    psi1,
    psi2,
    sign_power,
    sqrt,
    tan,
    tanh,
    wrap,
    zeta,
)
from logkernel.models.series import SeriesSpec, SumMode


ACCELERATED_TERMS = NumericDefaults.ACCELERATED_MAX_TERMS

POSITIVE_A = ParamDomain(description="a > 0", positive=("a",))
OFF_ODD_PI = ParamDomain(
    description="a > 0, a not within 1e-6 of an odd multiple of pi",
    positive=("a",),
    exclude_odd_pi=("a",),
    exclusion=NumericDefaults.ODD_PI_EXCLUSION,
)
Q_GRID = tuple({"a": q} for q in (1.0, math.pi, 2 * math.pi, 4 * math.pi))


# ===========================================
# Builders
# ===========================================


def kernel(**fields: Any) -> IntegrandSpec:
    return IntegrandSpec(**fields)


def closed(expr: Expr, label: str = "closed form", convention: Optional[str] = None) -> ClosedForm:
    return ClosedForm(expr=expr, label=label, convention=convention)


def series(
    term_id: str,
    mode: SumMode,
    scale: Any = 1,
    offset: Any = 0,
    params: Optional[dict] = None,
    label: Optional[str] = None,
    tol: float = 1e-11,
    max_terms: Optional[int] = None,
    convention: Optional[str] = None,
    fallback_mode: Optional[SumMode] = None,
) -> SeriesExpr:
    spec = SeriesSpec(
        term_id=term_id,
        params=params or {},
        mode=mode,
        max_terms=max_terms or NumericDefaults.max_terms_for_mode(mode),
        tol=tol,
    )
    return SeriesExpr(
        series=spec,
        scale=wrap(scale),
        offset=wrap(offset),
        label=label or f"series {term_id}",
        convention=convention,
        fallback_mode=fallback_mode,
    )


def _both_halves(spec: IntegrandSpec) -> tuple[IntegrandSpec, IntegrandSpec]:
    return spec.with_interval("0_1"), spec.with_interval("1_inf")


# ===========================================
# Main results
# ===========================================


def _main_identities() -> list[Identity]:
    base = kernel()
    log_num = kernel(log_power=1)
    squared = kernel(denom_power=2)
    at_pi = kernel(shift=math.pi)
    quarter = Fraction(1, 4)
    inv_pi2 = 1 / PI**2

    log_series_6 = series(
        "log_odd_over_k_k1", "tail_corrected",
        scale=-1 / (2 * PI**2), offset=quarter - inv_pi2, label="log series",
    )
    bernoulli_series_7 = series(
        "bernoulli_pi", "direct",
        scale=1 / (2 * PI**2), offset=quarter - inv_pi2 - ln(PI / 2) / PI**2,
        label="Bernoulli series",
    )
    zeta_series_8 = series(
        "zeta_over_2km1_4k", "direct",
        scale=-2 / PI**2, offset=quarter - inv_pi2, label="zeta series",
    )

    return [
        Identity(
            id="main-01",
            title="int_0^1 1/((a^2+ln^2x)(1+x)) as a series of sine and cosine integrals",
            lhs=(base,),
            rhs=(
                series(
                    "si_ci_shift", "alternating_accelerated",
                    scale=1 / A, label="si/Ci series", max_terms=ACCELERATED_TERMS,
                    fallback_mode="cesaro_c1",
                ),
            ),
            params=("a",),
            param_domain=POSITIVE_A,
            citation="main result 1",
        ),
        Identity(
            id="main-02",
            title="main-01 at a = pi: (1/pi) sum si(k pi)",
            lhs=(at_pi,),
            rhs=(
                series("si_kpi", "alternating_accelerated", scale=1 / PI, label="si series",
                       max_terms=ACCELERATED_TERMS),
            ),
            citation="main result 2",
        ),
        Identity(
            id="main-03",
            title="int_0^1 1/((a^2+ln^2x)(1+x)) as a log series over odd multiples of pi",
            lhs=(base,),
            rhs=(
                series("saalschuetz_log", "tail_corrected", scale=-2, offset=PI / (4 * A),
                       label="log series"),
            ),
            params=("a",),
            param_domain=OFF_ODD_PI,
            citation="main result 3",
        ),
        Identity(
            id="main-04",
            title="int_1^inf 1/((a^2+ln^2x)(1+x))",
            lhs=(base.with_interval("1_inf"),),
            rhs=(
                series("saalschuetz_log", "tail_corrected", scale=2, offset=PI / (4 * A),
                       label="log series"),
            ),
            params=("a",),
            param_domain=OFF_ODD_PI,
            citation="main result 4",
        ),
        Identity(
            id="main-05",
            title="int_0^inf 1/((a^2+ln^2x)(1+x)) = pi/(2a)",
            lhs=(base.with_interval("0_inf"),),
            rhs=(closed(PI / (2 * A)),),
            params=("a",),
            param_domain=POSITIVE_A,
            citation="main result 5",
        ),
        Identity(
            id="main-06",
            title="int_0^1 1/((pi^2+ln^2x)(1+x)) with log, Bernoulli and zeta series",
            lhs=(at_pi,),
            rhs=(log_series_6, bernoulli_series_7, zeta_series_8),
            citation="main results 6, 7 and 8",
        ),
        Identity(
            id="main-07",
            title="int_0^1 1/((pi^2+ln^2x)(1+x)) by a Bernoulli series",
            lhs=(at_pi,),
            rhs=(bernoulli_series_7,),
            citation="main result 7",
        ),
        Identity(
            id="main-08",
            title="int_0^1 1/((pi^2+ln^2x)(1+x)) by a zeta series",
            lhs=(at_pi,),
            rhs=(zeta_series_8,),
            citation="main result 8",
        ),
        Identity(
            id="main-09",
            title="int_0^1 1/((4 pi^2+ln^2x)(1+x))",
            lhs=(kernel(shift=2 * math.pi),),
            rhs=(
                series("log_odd_over_2km1_2kp3", "tail_corrected",
                       scale=-2 / PI**2, offset=Fraction(1, 8), label="log series"),
            ),
            citation="main result 9",
        ),
        Identity(
            id="main-10",
            title="int_0^1 1/((a^2+ln^2x)^2(1+x))",
            lhs=(squared,),
            rhs=(
                series(
                    "saalschuetz_log_sq", "tail_corrected", scale=2,
                    offset=PI / (8 * A**3) - tan(A / 2) / (4 * A**3), label="log series",
                ),
            ),
            params=("a",),
            param_domain=OFF_ODD_PI,
            citation="main result 10",
        ),
        Identity(
            id="main-11",
            title="int_0^1 1/((pi^2+ln^2x)^2(1+x))",
            lhs=(kernel(shift=math.pi, denom_power=2),),
            rhs=(
                series(
                    "log_odd_over_k2_k12", "tail_corrected", scale=1 / (8 * PI**4),
                    offset=1 / (8 * PI**2) - 3 / (4 * PI**4), label="log series",
                ),
            ),
            citation="main result 11",
        ),
        Identity(
            id="main-12",
            title="int_0^1 1/((a^2+ln^2x)(1+x)^2) in trigamma values",
            lhs=(kernel(outer="inv_1px_sq"),),
            rhs=(
                closed(-psi1(A / (2 * PI)) / (4 * A * PI) + psi1(A / PI) / (A * PI), label="trigamma"),
                closed(psi1(Fraction(1, 2) + A / (2 * PI)) / (4 * PI * A), label="trigamma, duplicated"),
            ),
            params=("a",),
            param_domain=POSITIVE_A,
            citation="main result 12",
        ),
        Identity(
            id="main-13",
            title="int 1/((pi^2+ln^2x)(1+x)^2) over (0,1) and (1,inf) = 1/24",
            lhs=_both_halves(kernel(shift=math.pi, outer="inv_1px_sq")),
            rhs=(
                RationalConstant(p=1, q=24, label="1/24"),
                series("k_si_kpi", "cesaro_c1", scale=1 / PI, label="(C,1) series k si(k pi)",
                       tol=1e-9, max_terms=ACCELERATED_TERMS),
            ),
            citation="main result 13",
        ),
        Identity(
            id="main-14",
            title="int_0^1 ln x/((a^2+ln^2x)(1+x)) in digamma values",
            lhs=(log_num,),
            rhs=(
                closed(ln(2 * A / PI) / 2 + psi(A / (2 * PI)) / 2 - psi(A / PI), label="digamma"),
                closed(ln(A / (2 * PI)) / 2 - psi(Fraction(1, 2) + A / (2 * PI)) / 2, label="Legendre form"),
            ),
            params=("a",),
            param_domain=POSITIVE_A,
            citation="main result 14",
        ),
        Identity(
            id="main-15",
            title="int_0^1 ln x/((pi^2+ln^2x)(1+x)) = gamma/2 - ln2/2",
            lhs=(kernel(shift=math.pi, log_power=1),),
            rhs=(
                closed(GAMMA / 2 - LN2 / 2),
                series("ci_kpi", "alternating_accelerated", scale=-1, label="Ci series",
                       tol=1e-10, max_terms=ACCELERATED_TERMS),
            ),
            citation="main result 15",
        ),
        Identity(
            id="main-16",
            title="int_0^1 ln x/((a^2+ln^2x)^2(1+x)) in trigamma values",
            lhs=(kernel(log_power=1, denom_power=2),),
            rhs=(
                closed(
                    -1 / (4 * A**2) - psi1(A / (2 * PI)) / (8 * A * PI) + psi1(A / PI) / (2 * A * PI),
                    label="trigamma",
                ),
            ),
            params=("a",),
            param_domain=POSITIVE_A,
            citation="main result 16",
        ),
        Identity(
            id="main-17",
            title="int_0^1 ln x/((pi^2+ln^2x)^2(1+x)) = 1/48 - 1/(4 pi^2)",
            lhs=(kernel(shift=math.pi, log_power=1, denom_power=2),),
            rhs=(
                closed(Fraction(1, 48) - 1 / (4 * PI**2)),
                closed(
                    -1 / (4 * PI**2) - psi1(Fraction(1, 2)) / (8 * PI**2) + psi1(1) / (2 * PI**2),
                    label="trigamma",
                ),
            ),
            citation="main result 17",
        ),
        Identity(
            id="main-18",
            title="int_0^1 ln x/((pi^2+ln^2x)(1+x)^2) = -sum k Ci(k pi)",
            lhs=(kernel(shift=math.pi, log_power=1, outer="inv_1px_sq"),),
            rhs=(
                series("k_ci_kpi", "alternating_accelerated", scale=-1, label="Euler-summed k Ci series",
                       tol=1e-10, max_terms=ACCELERATED_TERMS),
                series("k_ci_kpi", "cesaro_c1", scale=-1, label="(C,1) k Ci series",
                       tol=1e-9, max_terms=ACCELERATED_TERMS),
            ),
            citation="main result 18",
        ),
        Identity(
            id="main-19",
            title="int 1/((pi^2+ln^2x)^2(1+x)^2) over (0,1) and (1,inf) = (zeta(3)+zeta(2))/(8 pi^4)",
            lhs=_both_halves(kernel(shift=math.pi, denom_power=2, outer="inv_1px_sq")),
            rhs=(
                closed((zeta(3) + zeta(2)) / (8 * PI**4), label="zeta values"),
                closed((-psi2(1) / 2 + psi1(1)) / (8 * PI**4), label="polygamma values"),
            ),
            citation="main result 19",
        ),
    ]


# ===========================================
# Lemmas
# ===========================================


def _points(name: str, values: tuple) -> tuple[dict, ...]:
    return tuple({name: v} for v in values)


def _lemma_identities() -> list[Identity]:
    moment_grid = tuple(
        {"k": k, "a": a} for a in (1.0, math.pi, 2 * math.pi) for k in range(21)
    )
    legendre_grid = (
        {"a": math.pi, "b": 1.0},
        {"a": 2 * math.pi, "b": 1.0},
        {"a": 1.0, "b": 1.0},
        {"a": 1.0, "b": 2.0},
        {"a": 5.0, "b": 0.5},
    )
    return [
        Identity(
            id="lemma-bernoulli-zeta",
            title="B_2k = (-1)^(k+1) 2 (2k)! zeta(2k) / (2 pi)^(2k)",
            lhs=(ComputedLhs(routine="bernoulli_even", label="exact B_2k"),),
            rhs=(closed(sign_power(K + 1) * 2 * factorial(2 * K) * zeta(2 * K) / (2 * PI) ** (2 * K)),),
            params=("k",),
            grid=_points("k", tuple(range(1, 9))),
            citation="lemma: Bernoulli numbers through zeta(2k)",
        ),
        Identity(
            id="lemma-boundary-y0",
            title="int_0^1 1/((4 pi^2+ln^2x)(1+x) sqrt x) = (4-pi)/(8 pi)",
            lhs=(kernel(shift=2 * math.pi, outer="inv_1px_sqrtx"),),
            rhs=(
                closed((4 - PI) / (8 * PI)),
                closed((psi(Fraction(5, 4)) - psi(Fraction(3, 4))) / (8 * PI), label="digamma"),
            ),
            citation="lemma: boundary value of the auxiliary function at y = 0",
        ),
        Identity(
            id="lemma-digamma-duplication",
            title="psi(2z) = psi(z)/2 + psi(z + 1/2)/2 + ln 2",
            lhs=(closed(psi(2 * Z), label="psi(2z)"),),
            rhs=(closed(psi(Z) / 2 + psi(Z + Fraction(1, 2)) / 2 + LN2),),
            params=("z",),
            grid=_points("z", (0.3, 1.0, 2.5)),
            citation="lemma: digamma duplication",
        ),
        Identity(
            id="lemma-digamma-reflection",
            title="psi(1 - z) - psi(z) = pi cot(pi z)",
            lhs=(closed(psi(1 - Z) - psi(Z), label="psi(1-z) - psi(z)"),),
            rhs=(closed(PI * cot(PI * Z)),),
            params=("z",),
            grid=_points("z", (0.1, 0.25, 0.3, 0.7)),
            citation="lemma: digamma reflection",
        ),
        Identity(
            id="lemma-ei-imag",
            title="(i/2)[Ei(-ix) - Ei(ix)] = Si(x) + pi/2",
            lhs=(ComputedLhs(routine="ei_imag_property", label="Ei on the imaginary axis"),),
            rhs=(closed(Si(X) + PI / 2),),
            params=("x",),
            param_domain=ParamDomain(description="x > 0", positive=("x",)),
            grid=_points("x", (1.0, math.pi, 10.0)),
            citation="lemma: exponential integral on the imaginary axis",
        ),
        Identity(
            id="lemma-kummer",
            title="Kummer's Fourier series of ln Gamma(y)",
            lhs=(ComputedLhs(routine="kummer", label="Kummer series"),),
            rhs=(closed(gamma_ln(Y)),),
            params=("y",),
            param_domain=ParamDomain(description="0 < y < 1", open_unit=("y",)),
            grid=_points("y", tuple(round(0.1 * i, 1) for i in range(1, 10))),
            citation="lemma: Kummer series",
        ),
        Identity(
            id="lemma-kummer-trig",
            title="int_{3/4}^1 - int_{1/4}^{1/2} sin(2 pi k y) cos(4 pi y) dy",
            lhs=(ComputedLhs(routine="kummer_trig_quadrature", label="quadrature"),),
            rhs=(
                closed((sign_power(K) - 1), label="claimed (-1)^k - 1"),
                closed(kummer_trig(K), label="exact"),
            ),
            params=("k",),
            grid=_points("k", tuple(range(1, 7))),
            citation="lemma: trigonometric integral in the Kummer argument",
            status_hint="suspect",
        ),
        Identity(
            id="lemma-legendre",
            title="int_0^inf t/((e^{bt}+1)(t^2+a^2)) dt = psi(1/2 + ab/2pi)/2 - ln(ab/2pi)/2",
            lhs=(kernel(family="legendre_t_kernel"),),
            rhs=(closed(psi(Fraction(1, 2) + A * B / (2 * PI)) / 2 - ln(A * B / (2 * PI)) / 2),),
            params=("a", "b"),
            param_domain=ParamDomain(description="a > 0, b > 0", positive=("a", "b")),
            grid=legendre_grid,
            citation="lemma: Legendre's formula",
        ),
        Identity(
            id="lemma-log-bernoulli-sum",
            title="sum ln(2k+1)/(k(k+1)) = 2 ln(pi/2) - sum (-1)^k pi^2k B_2k/((2k)! k (2k-1))",
            lhs=(series("log_odd_over_k_k1", "tail_corrected", label="log series"),),
            rhs=(series("bernoulli_pi", "direct", scale=-1, offset=2 * ln(PI / 2), label="Bernoulli series"),),
            citation="lemma: log series through Bernoulli numbers",
        ),
        Identity(
            id="lemma-moment-ci",
            title="int_0^1 (-x)^k ln x/(pi^2+ln^2x) dx = -Ci((k+1) pi)",
            lhs=(ComputedLhs(routine="moment_integral", fixed={"p": 1, "a": math.pi}, label="moment closed form"),),
            rhs=(closed(-Ci((K + 1) * PI)),),
            params=("k",),
            grid=_points("k", tuple(range(6))),
            citation="lemma: moment integrals at a = pi",
        ),
        Identity(
            id="lemma-moment-p0",
            title="int_0^1 (-x)^k/(a^2+ln^2x) dx = (-1)^k f(a(k+1))/a",
            lhs=(
                kernel(outer="alternating_monomial"),
                ComputedLhs(routine="moment_integral", fixed={"p": 0}, label="moment closed form"),
            ),
            rhs=(closed(sign_power(K) * aux_f(A * (K + 1)) / A, label="auxiliary f"),),
            params=("k", "a"),
            param_domain=POSITIVE_A,
            grid=moment_grid,
            citation="lemma: moment integrals",
        ),
        Identity(
            id="lemma-moment-p1",
            title="int_0^1 (-x)^k ln x/(a^2+ln^2x) dx = (-1)^(k+1) g(a(k+1))",
            lhs=(
                kernel(outer="alternating_monomial", log_power=1),
                ComputedLhs(routine="moment_integral", fixed={"p": 1}, label="moment closed form"),
            ),
            rhs=(closed(sign_power(K + 1) * aux_g(A * (K + 1)), label="auxiliary g"),),
            params=("k", "a"),
            param_domain=POSITIVE_A,
            grid=moment_grid,
            citation="lemma: moment integrals",
        ),
        Identity(
            id="lemma-saalschuetz",
            title="tanh x = 8x sum 1/((2k+1)^2 pi^2 + 4x^2)",
            lhs=(ComputedLhs(routine="saalschuetz", label="partial fractions"),),
            rhs=(closed(tanh(X)),),
            params=("x",),
            grid=_points("x", (0.0, 0.5, 1.0, 2.0, 5.0, 10.0, -3.0)),
            citation="lemma: Saalschuetz partial fractions of tanh",
        ),
        Identity(
            id="lemma-summation-formula",
            title="-2 pi int F(1/2+it)/(e^{pi t}+e^{-pi t})^2 dt = zeta(s), F(x) = x^(1-s)/(1-s)",
            lhs=(ComputedLhs(routine="summation_formula", label="sech^2 integral"),),
            rhs=(closed(zeta(S)),),
            params=("s",),
            grid=_points("s", (2.0, 3.0, 4.0)),
            citation="lemma: summation formula for zeta(s)",
        ),
        Identity(
            id="lemma-zeta-log-sum",
            title="2 sum zeta(2k)/(k 4^k) = 2 ln(pi/2)",
            lhs=(series("zeta_over_k_4k", "direct", scale=2, label="zeta series"),),
            rhs=(closed(2 * ln(PI / 2)),),
            citation="lemma: zeta(2k)/(k 4^k) sum",
        ),
        Identity(
            id="lemma-zeta3-chain",
            title="4 pi^4 I2 - 2 pi^2 I1 over (0,inf) = zeta(3)",
            lhs=(ComputedLhs(routine="zeta3_chain", label="quadrature chain"),),
            rhs=(closed(zeta(3)),),
            citation="lemma: zeta(3) from the full-line integrals",
        ),
    ]


# ===========================================
# Remarkable integral family
# ===========================================


def _remark_identities() -> list[Identity]:
    spec = kernel(family="log_ratio_kernel", outer="inv_1px_sq")
    return [
        Identity(
            id="remark-n",
            title="int ln(((n+1)^2 pi^2+ln^2x)/((n-1)^2 pi^2+ln^2x))/(1+x)^2 over each half-line",
            lhs=_both_halves(spec),
            rhs=(closed(2 / N, label="claimed 2/n"),),
            params=("n",),
            param_domain=ParamDomain(description="n >= 1", positive=("n",)),
            grid=_points("n", (1, 2, 3, 4, 5)),
            citation="remark: log-ratio integrals",
        ),
    ]


# ===========================================
# Table 129 entries
# ===========================================


def _table_bernoulli_pair(rho: int, form: int, scale: Expr) -> tuple[SeriesExpr, SeriesExpr]:
    common = {"rho": rho, "form": form}
    modern = series(
        "table_bernoulli", "direct", scale=scale,
        params={**common, "archaic": 0}, label="modern B_(2n+1)", convention="modern",
    )
    archaic = series(
        "table_bernoulli", "asymptotic_optimal", scale=scale,
        params={**common, "archaic": 1}, label="archaic B_(2n+1)", convention="archaic",
    )
    return modern, archaic


def _appendix(entry: int, lhs: IntegrandSpec, rhs: tuple, q: bool, hint: str = "expected_pass") -> Identity:
    return Identity(
        id=f"appendix-{entry:02d}",
        title=lhs.describe(),
        lhs=(lhs,),
        rhs=rhs,
        params=("a",) if q else (),
        param_domain=POSITIVE_A if q else ParamDomain(),
        grid=Q_GRID if q else None,
        citation=f"Bierens de Haan table 129, entry {entry}",
        status_hint=hint,
    )


def _appendix_identities() -> list[Identity]:
    p1 = {"log_power": 1}
    root2 = sqrt(2)
    log_silver = ln((root2 - 1) / (root2 + 1))
    return [
        _appendix(1, kernel(shift=2 * math.pi, outer="inv_1mx", **p1),
                  (closed(Fraction(1, 4) - GAMMA / 2),), q=False),
        _appendix(2, kernel(outer="inv_1mx", **p1),
                  (closed((PI / A + ln(2 * PI / A) + psi(A / (2 * PI))) / 2),), q=True),
        _appendix(3, kernel(outer="inv_1mx", kernel_sign=-1, **p1),
                  _table_bernoulli_pair(2, 0, PI**2 / A**2), q=True, hint="archaic_convention"),
        _appendix(4, kernel(outer="inv_1mx", denom_power=2, **p1),
                  _table_bernoulli_pair(2, 1, -(PI**2) / A**4), q=True, hint="archaic_convention"),
        _appendix(5, kernel(outer="inv_1mx", denom_power=2, kernel_sign=-1, **p1),
                  _table_bernoulli_pair(2, 2, PI**2 / A**2), q=True, hint="archaic_convention"),
        _appendix(6, kernel(shift=math.pi, outer="inv_1px2"),
                  (closed((4 - PI) / (4 * PI)),), q=False),
        _appendix(7, kernel(shift=math.pi / 2, scale=0.25, outer="inv_1px2"),
                  (closed(LN2 / (4 * PI)),), q=False),
        _appendix(8, kernel(shift=math.pi / 4, scale=1 / 16, outer="inv_1px2"),
                  (closed((PI + log_silver) / (8 * PI * root2)),), q=False),
        _appendix(9, kernel(outer="inv_1px2"),
                  (closed((psi((2 * A + 3 * PI) / (4 * PI)) - psi((2 * A + PI) / (4 * PI))) / (4 * A)),), q=True),
        _appendix(10, kernel(shift=math.pi, outer="inv_1mx2", **p1),
                  (closed((Fraction(1, 2) - LN2) / 2),), q=False),
        _appendix(11, kernel(shift=math.pi / 2, scale=0.25, outer="inv_1mx2", **p1),
                  (closed((2 - PI) / 16),), q=False),
        _appendix(12, kernel(shift=math.pi / 4, scale=1 / 16, outer="inv_1mx2", **p1),
                  (closed(-PI / (32 * root2) + Fraction(1, 16) + log_silver / (32 * root2)),), q=False),
        _appendix(13, kernel(shift=math.pi, outer="x_over_1mx2", **p1),
                  (closed(Fraction(1, 4) - GAMMA / 2),), q=False),
        _appendix(14, kernel(outer="x_over_1mx2", **p1),
                  (closed((PI / (2 * A) + ln(PI / A) + psi(A / PI)) / 2),), q=True),
        _appendix(15, kernel(outer="x_over_1mx2", kernel_sign=-1, **p1),
                  _table_bernoulli_pair(1, 0, PI**2 / (4 * A**2)), q=True, hint="archaic_convention"),
        _appendix(16, kernel(outer="x_over_1mx2", denom_power=2, **p1),
                  _table_bernoulli_pair(1, 1, -(PI**2) / (4 * A**4)), q=True, hint="archaic_convention"),
        _appendix(17, kernel(outer="x_over_1mx2", denom_power=2, kernel_sign=-1, **p1),
                  _table_bernoulli_pair(1, 2, -(PI**2) / (4 * A**4)), q=True, hint="archaic_convention"),
    ]


# ===========================================
# Public API
# ===========================================


@lru_cache(maxsize=1)
def build_registry() -> tuple[Identity, ...]:
    """
    Every identity, in stable order: main results, lemmas, the remark
    family, then the table entries.
    """
    identities = _main_identities() + _lemma_identities() + _remark_identities() + _appendix_identities()
    ids = [identity.id for identity in identities]
    if len(ids) != len(set(ids)):
        raise ValueError("duplicate identity ids in registry")
    return tuple(identities)


@lru_cache(maxsize=1)
def _index() -> dict[str, Identity]:
    return {identity.id: identity for identity in build_registry()}


def list_identities() -> list[str]:
    return [identity.id for identity in build_registry()]


def get_identity(identity_id: str) -> Identity:
    """
    Look up an identity by id.

    Raises:
        IdentityNotFoundError: id not in the registry
    """
    identity = _index().get(identity_id)
    if identity is None:
        raise IdentityNotFoundError(identity_id, list_identities())
    return identity


def _describe_rhs(rhs) -> dict[str, Any]:
    out = {"kind": rhs.kind, "label": rhs.label, "expression": rhs.describe()}
    if rhs.convention:
        out["convention"] = rhs.convention
    return out


def registry_document() -> list[dict[str, Any]]:
    """JSON-ready description of every identity for documentation tooling."""
    document = []
    for identity in build_registry():
        document.append(
            {
                "id": identity.id,
                "title": identity.title,
                "citation": identity.citation,
                "status_hint": identity.status_hint,
                "params": list(identity.params),
                "param_domain": identity.param_domain.description,
                "lhs": [lhs.describe() for lhs in identity.lhs],
                "rhs": [_describe_rhs(rhs) for rhs in identity.rhs],
            }
        )
    return document
