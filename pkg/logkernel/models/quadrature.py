"""
Quadrature Models for logkernel

Models:
    - QuadConfig: tolerances and limits for one integration
    - QuadResult: value, error estimate and convergence flag
"""

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


Regularization = Literal["none", "principal_value", "finite_part"]


class QuadConfig(BaseModel):
    """Tolerances and limits for adaptive integration."""

    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(default=1e-12, gt=0, description="Absolute error target")
    rel_tol: float = Field(default=1e-12, gt=0, description="Relative error target")
    max_subdivisions: int = Field(default=2000, ge=1, description="Panel budget")
    tail_cutoff_margin: float = Field(
        default=40.0,
        gt=0,
        description="Maximum truncation distance past the monotone point, in units of the decay scale of t",
    )

    def scaled(self, factor: float) -> "QuadConfig":
        """Copy with both tolerances multiplied by ``factor``."""
        return self.model_copy(
            update={"abs_tol": self.abs_tol * factor, "rel_tol": self.rel_tol * factor}
        )


class QuadResult(BaseModel):
    """
    Outcome of one integration.

    ``converged`` is recomputed from the final error estimate, so it always
    means error_estimate <= max(abs_tol, rel_tol * |value|).
    """

    model_config = ConfigDict(frozen=True)

    value: float = Field(description="Integral estimate")
    error_estimate: float = Field(ge=0, description="Absolute error estimate, tail bounds included")
    subdivisions_used: int = Field(ge=0, description="Number of panels in the final partition")
    converged: bool = Field(description="Whether the tolerance contract is met")
    regularization: Regularization = Field(
        default="none",
        description="How a non-integrable pole was interpreted",
    )

    def meets(self, cfg: QuadConfig) -> bool:
        return self.error_estimate <= max(cfg.abs_tol, cfg.rel_tol * abs(self.value))


def combine_results(
    parts: list[tuple[float, QuadResult]],
    cfg: QuadConfig,
    extra_error: float = 0.0,
    offset: float = 0.0,
) -> QuadResult:
    """
    Linear combination ``offset + sum(c * r.value)`` with errors added.

    Args:
        parts: (coefficient, result) pairs
        cfg: Config used to recompute the converged flag
        extra_error: Additional absolute error (e.g. a tail bound)
        offset: Exactly known additive constant

    Returns:
        Combined result
    """
    value = math.fsum([offset] + [c * r.value for c, r in parts])
    error = math.fsum([extra_error] + [abs(c) * r.error_estimate for c, r in parts])
    regularization: Regularization = "none"
    for _, r in parts:
        if r.regularization != "none":
            regularization = r.regularization
    result = QuadResult(
        value=value,
        error_estimate=error,
        subdivisions_used=sum(r.subdivisions_used for _, r in parts),
        converged=True,
        regularization=regularization,
    )
    return result.model_copy(
        update={"converged": result.meets(cfg) and all(r.converged for _, r in parts)}
    )
