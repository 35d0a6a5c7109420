"""
Series Models for logkernel

Models:
    - SeriesSpec: term generator id, parameters and summation mode
    - SumResult: value, error estimate and engine diagnostics
    - SumConfig: caller-side overrides applied to registry series
"""

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


SumMode = Literal[
    "direct",
    "tail_corrected",
    "alternating_accelerated",
    "cesaro_c1",
    "asymptotic_optimal",
]

# Modes that can appear in results; closed forms and rationals are not summed
EvaluationMode = Literal[
    "direct",
    "tail_corrected",
    "alternating_accelerated",
    "cesaro_c1",
    "asymptotic_optimal",
    "closed_form",
    "rational",
    "computed",
]

ParamValue = Union[int, float]


class SeriesSpec(BaseModel):
    """
    A series to be summed: which terms, with which parameters, and how.

    Parameters not given here are taken from the identity's parameter point
    at evaluation time.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "term_id": "k_si_kpi",
                "params": {},
                "mode": "cesaro_c1",
                "max_terms": 100000,
                "tol": 1e-10,
            }
        },
    )

    term_id: str = Field(description="Registered term generator id")
    params: dict[str, ParamValue] = Field(default_factory=dict, description="Fixed term parameters")
    mode: SumMode = Field(description="Summation engine")
    max_terms: int = Field(default=1_000_000, ge=1, description="Term budget")
    tol: float = Field(default=1e-11, gt=0, description="Target absolute error")


class SumResult(BaseModel):
    """Outcome of one summation (or closed-form evaluation)."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(description="Sum estimate")
    error_estimate: float = Field(ge=0, description="Absolute error estimate")
    terms_used: int = Field(ge=0, description="Number of terms evaluated")
    converged: bool = Field(description="error_estimate <= tol")
    mode_used: EvaluationMode = Field(description="Engine that produced the value")
    notes: tuple[str, ...] = Field(default=(), description="Engine diagnostics (fallbacks, warnings)")


class SumConfig(BaseModel):
    """Overrides applied when evaluating registry series."""

    model_config = ConfigDict(frozen=True)

    tol: Optional[float] = Field(default=None, gt=0, description="Replaces each series' tol")
    max_terms: Optional[int] = Field(default=None, ge=1, description="Caps each series' term budget")
