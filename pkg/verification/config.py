"""
Verification Run Configuration

Centralizes the numeric settings of a suite run or table hunt: parameter
grid, tolerance, quadrature and summation overrides, and output controls.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Optional

from logkernel.config import NumericDefaults
from logkernel.models.quadrature import QuadConfig
from logkernel.models.series import SumConfig


@dataclass
class VerifyConfig:
    """All settings for a single verification run."""

    # Identity selection
    ids: list[str] = field(default_factory=list)

    # Parameters
    a_grid: tuple[float, ...] = NumericDefaults.A_GRID
    tol: float = NumericDefaults.TOL

    # Quadrature
    quad_abs_tol: float = NumericDefaults.QUAD_TOL
    quad_rel_tol: float = NumericDefaults.QUAD_TOL
    max_subdivisions: int = 2000

    # Series overrides (None keeps each registry series' own setting)
    series_tol: Optional[float] = None
    series_max_terms: Optional[int] = None

    # Output
    timing: bool = False
    max_workers: Optional[int] = None

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be > 0")
        if not all(math.isfinite(a) for a in self.a_grid):
            raise ValueError("a_grid values must be finite")

    def quad_config(self) -> QuadConfig:
        return QuadConfig(
            abs_tol=self.quad_abs_tol,
            rel_tol=self.quad_rel_tol,
            max_subdivisions=self.max_subdivisions,
        )

    def sum_config(self) -> SumConfig:
        return SumConfig(tol=self.series_tol, max_terms=self.series_max_terms)

    def to_dict(self) -> dict:
        """Serializable snapshot of the run settings."""
        return asdict(self)
