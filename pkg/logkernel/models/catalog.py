"""
Catalog Models for logkernel

This module defines the registry row types: integrand descriptors for the
left-hand sides and the tagged union of right-hand-side value expressions.

Models:
    - IntegrandSpec: log-kernel integrand family descriptor
    - ComputedLhs: non-integral left-hand sides (lemma routines)
    - ClosedForm / SeriesExpr / RationalConstant: ValueExpr variants
    - ParamDomain: declared parameter domain with exclusion rules
    - Identity: one registry row
"""

import math
from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from logkernel.models.expressions import Expr
from logkernel.models.series import ParamValue, SeriesSpec, SumMode


IntegrandFamily = Literal["log_kernel", "log_ratio_kernel", "legendre_t_kernel"]

OuterFactor = Literal[
    "inv_1px",          # 1/(1+x)
    "inv_1px_sq",       # 1/(1+x)^2
    "inv_1mx",          # 1/(1-x)
    "x_over_1mx2",      # x/(1-x^2)
    "inv_1mx2",         # 1/(1-x^2)
    "inv_1px2",         # 1/(1+x^2)
    "inv_1px_sqrtx",    # 1/((1+x) sqrt(x))
    "alternating_monomial",  # (-x)^k
]

Interval = Literal["0_1", "1_inf", "0_inf"]

StatusHint = Literal["expected_pass", "suspect", "archaic_convention"]

OUTER_LABELS: dict[str, str] = {
    "inv_1px": "1/(1+x)",
    "inv_1px_sq": "1/(1+x)^2",
    "inv_1mx": "1/(1-x)",
    "x_over_1mx2": "x/(1-x^2)",
    "inv_1mx2": "1/(1-x^2)",
    "inv_1px2": "1/(1+x^2)",
    "inv_1px_sqrtx": "1/((1+x)sqrt(x))",
    "alternating_monomial": "(-x)^k",
}

INTERVAL_LABELS: dict[str, str] = {"0_1": "(0,1)", "1_inf": "(1,inf)", "0_inf": "(0,inf)"}


# ===========================================
# Left-hand sides
# ===========================================


class IntegrandSpec(BaseModel):
    """
    Log-kernel integrand descriptor.

    log_kernel:        scale * ln(x)^p * outer(x) / (a^2 + sign*ln^2 x)^m
    log_ratio_kernel:  ln(((n+1)^2 pi^2 + ln^2 x)/((n-1)^2 pi^2 + ln^2 x)) / (1+x)^2
    legendre_t_kernel: t / ((e^{b t} + 1)(t^2 + a^2)) on (0, inf) in t directly

    ``shift``, ``n``, ``rate`` and ``power`` left as None are bound from the
    identity parameters a, n, b and k respectively.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["integrand"] = "integrand"
    family: IntegrandFamily = Field(default="log_kernel", description="Integrand family")
    log_power: Literal[0, 1] = Field(default=0, description="Power p of ln(x) in the numerator")
    denom_power: Literal[1, 2] = Field(default=1, description="Power m of (a^2 + ln^2 x)")
    shift: Optional[float] = Field(default=None, gt=0, description="a; None binds params['a']")
    outer: OuterFactor = Field(default="inv_1px", description="Outer rational factor")
    interval: Interval = Field(default="0_1", description="Integration interval in x")
    n: Optional[int] = Field(default=None, ge=1, description="log_ratio_kernel index")
    rate: Optional[float] = Field(default=None, gt=0, description="legendre b; None binds params['b']")
    power: Optional[int] = Field(default=None, ge=0, description="alternating_monomial k; None binds params['k']")
    scale: float = Field(default=1.0, description="Constant prefactor")
    kernel_sign: Literal[1, -1] = Field(default=1, description="+1 for a^2+ln^2 x, -1 for a^2-ln^2 x")

    @model_validator(mode="after")
    def _check_family(self) -> "IntegrandSpec":
        if self.family == "log_ratio_kernel" and self.outer != "inv_1px_sq":
            raise ValueError("log_ratio_kernel requires outer (1+x)^-2")
        return self

    def bind(self, params: dict[str, ParamValue]) -> "IntegrandSpec":
        """Resolve parameter-bound fields from an identity parameter point."""
        update: dict[str, Any] = {}
        if self.shift is None and "a" in params:
            update["shift"] = float(params["a"])
        if self.n is None and "n" in params:
            update["n"] = int(params["n"])
        if self.rate is None and "b" in params:
            update["rate"] = float(params["b"])
        if self.power is None and "k" in params:
            update["power"] = int(params["k"])
        return self.model_copy(update=update) if update else self

    def with_interval(self, interval: Interval) -> "IntegrandSpec":
        return self.model_copy(update={"interval": interval})

    def describe(self) -> str:
        """One-line text form for reports and the registry export."""
        a = "a" if self.shift is None else _fmt(self.shift)
        where = INTERVAL_LABELS[self.interval]
        if self.family == "legendre_t_kernel":
            b = "b" if self.rate is None else _fmt(self.rate)
            return f"int_0^inf t/((exp({b} t)+1)(t^2+{a}^2)) dt"
        if self.family == "log_ratio_kernel":
            n = "n" if self.n is None else str(self.n)
            return f"int_{where} ln(((n+1)^2 pi^2+ln^2x)/((n-1)^2 pi^2+ln^2x)) /(1+x)^2 dx [n={n}]"
        num = "ln(x)" if self.log_power else "1"
        sign = "+" if self.kernel_sign > 0 else "-"
        kernel = f"({a}^2 {sign} ln^2 x)" + ("^2" if self.denom_power == 2 else "")
        outer = OUTER_LABELS[self.outer]
        if self.outer == "alternating_monomial" and self.power is not None:
            outer = f"(-x)^{self.power}"
        prefix = "" if self.scale == 1.0 else f"{_fmt(self.scale)} * "
        return f"int_{where} {prefix}{num}/{kernel} * {outer} dx"


class ComputedLhs(BaseModel):
    """A left-hand side produced by a named lemma routine (not an integrand)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["computed"] = "computed"
    routine: str = Field(description="Routine name in the lemma evaluator table")
    fixed: dict[str, ParamValue] = Field(default_factory=dict, description="Fixed routine arguments")
    label: str = Field(default="", description="Display label")

    def describe(self) -> str:
        return self.label or self.routine


# ===========================================
# Right-hand sides (ValueExpr)
# ===========================================


class ClosedForm(BaseModel):
    """Closed-form expression over constants, parameters and special functions."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["closed_form"] = "closed_form"
    expr: Expr = Field(description="Expression tree")
    label: str = Field(default="closed form", description="Variant label")
    convention: Optional[str] = Field(default=None, description="Bernoulli convention, if any")

    def describe(self) -> str:
        return self.expr.render()


class SeriesExpr(BaseModel):
    """``offset + scale * sum(series)``; offset and scale may depend on parameters."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["series"] = "series"
    series: SeriesSpec = Field(description="Series to sum")
    scale: Expr = Field(description="Multiplier of the sum")
    offset: Expr = Field(description="Additive closed-form part")
    label: str = Field(default="series", description="Variant label")
    convention: Optional[str] = Field(default=None, description="Bernoulli convention, if any")
    fallback_mode: Optional[SumMode] = Field(
        default=None, description="Mode retried when the primary mode does not converge"
    )

    def describe(self) -> str:
        return (
            f"{self.offset.render()} + {self.scale.render()} * "
            f"sum[{self.series.term_id}, {self.series.mode}]"
        )


class RationalConstant(BaseModel):
    """Exact rational p/q."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["rational"] = "rational"
    p: int = Field(description="Numerator")
    q: int = Field(description="Denominator (nonzero)")
    label: str = Field(default="rational", description="Variant label")
    convention: Optional[str] = None

    @model_validator(mode="after")
    def _nonzero(self) -> "RationalConstant":
        if self.q == 0:
            raise ValueError("denominator must be nonzero")
        return self

    @property
    def value(self) -> float:
        return self.p / self.q

    def describe(self) -> str:
        return f"{self.p}/{self.q}"


ValueExpr = Annotated[
    Union[ClosedForm, SeriesExpr, RationalConstant], Field(discriminator="kind")
]

LhsSpec = Annotated[
    Union[IntegrandSpec, ComputedLhs, ClosedForm, SeriesExpr], Field(discriminator="kind")
]


# ===========================================
# Identity
# ===========================================


class ParamDomain(BaseModel):
    """
    Declared parameter domain.

    ``positive`` names must be > 0; ``exclude_odd_pi`` names must stay at
    least ``exclusion`` away from odd multiples of pi; ``open_unit`` names must
    lie in (0, 1).
    """

    model_config = ConfigDict(frozen=True)

    description: str = Field(default="none", description="Human-readable domain")
    positive: tuple[str, ...] = Field(default=(), description="Parameters required > 0")
    exclude_odd_pi: tuple[str, ...] = Field(default=(), description="Parameters kept off odd multiples of pi")
    open_unit: tuple[str, ...] = Field(default=(), description="Parameters required in (0,1)")
    exclusion: float = Field(default=1e-6, gt=0, description="Exclusion radius")

    def violation(self, params: dict[str, ParamValue]) -> Optional[str]:
        """Reason the point is outside the domain, or None."""
        for name in self.positive:
            if name in params and not params[name] > 0:
                return f"{name} must be > 0"
        for name in self.open_unit:
            if name in params and not 0 < params[name] < 1:
                return f"{name} must lie in (0, 1)"
        for name in self.exclude_odd_pi:
            if name in params:
                ratio = float(params[name]) / math.pi
                nearest_odd = 2 * math.floor(ratio / 2) + 1
                if abs(params[name] - nearest_odd * math.pi) < self.exclusion:
                    return f"{name} within {self.exclusion:g} of an odd multiple of pi"
        return None


class Identity(BaseModel):
    """
    One registry row.

    Attributes:
        id: Stable registry id, e.g. "main-13"
        title: Short human-readable statement
        lhs: One or more left-hand sides (extra entries are alternative evaluations)
        rhs: One or more right-hand-side variants
        params: Free parameter names
        param_domain: Domain rules for params
        grid: Explicit parameter points; None means "use the suite a-grid" when
            params == ("a",), and a single run otherwise
        citation: Source anchor
        status_hint: What the verifier is expected to find
    """

    model_config = ConfigDict(frozen=True)

    id: str = Field(description="Unique registry id")
    title: str = Field(default="", description="Short statement")
    lhs: tuple[LhsSpec, ...] = Field(min_length=1, description="Left-hand sides")
    rhs: tuple[ValueExpr, ...] = Field(min_length=1, description="Right-hand-side variants")
    params: tuple[str, ...] = Field(default=(), description="Free parameter names")
    param_domain: ParamDomain = Field(default_factory=ParamDomain, description="Domain rules")
    grid: Optional[tuple[dict[str, ParamValue], ...]] = Field(default=None, description="Parameter points")
    citation: str = Field(min_length=1, description="Source anchor")
    status_hint: StatusHint = Field(default="expected_pass", description="Expected outcome")

    def variant_labels(self) -> list[str]:
        return [r.label for r in self.rhs]

    def lhs_label(self, index: int) -> str:
        lhs = self.lhs[index]
        if isinstance(lhs, IntegrandSpec):
            return f"lhs{INTERVAL_LABELS[lhs.interval]}"
        return f"lhs[{getattr(lhs, 'label', '') or lhs.kind}]"


def _fmt(x: float) -> str:
    if abs(x - math.pi) < 1e-15:
        return "pi"
    if abs(x - 2 * math.pi) < 1e-15:
        return "2pi"
    if abs(x - math.pi / 2) < 1e-15:
        return "pi/2"
    if abs(x - math.pi / 4) < 1e-15:
        return "pi/4"
    return f"{x:g}"
