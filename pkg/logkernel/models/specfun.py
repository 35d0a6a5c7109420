"""
Special Function Models for logkernel

Models:
    - ComplexPair: (re, im) pair used for Ei on the imaginary axis
    - BernoulliTable: even-index Bernoulli numbers under one convention
"""

import math
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator


BernoulliConvention = Literal["modern", "archaic"]


class ComplexPair(BaseModel):
    """A complex number stored as two finite doubles."""

    model_config = ConfigDict(frozen=True)

    re: float = Field(description="Real part")
    im: float = Field(description="Imaginary part")

    @field_validator("re", "im")
    @classmethod
    def _finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("ComplexPair components must be finite")
        return v

    def conjugate(self) -> "ComplexPair":
        return ComplexPair(re=self.re, im=-self.im)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class BernoulliTable(BaseModel):
    """
    Bernoulli numbers B_2k for k = 1..k_max.

    Under the modern convention ``values[k-1] = B_2k`` (signed). Under the
    archaic convention used by 19th-century tables the n-th entry is
    ``|B_2n|``, so the table symbol B_n means ``values[n-1]``.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"values": [1 / 6, -1 / 30, 1 / 42], "convention": "modern"}},
    )

    values: tuple[float, ...] = Field(description="Entry n (1-based) stored at position n-1")
    convention: BernoulliConvention = Field(description="modern or archaic")

    @property
    def k_max(self) -> int:
        return len(self.values)

    def get(self, n: int) -> float:
        """Entry n under this table's convention (1-based)."""
        return self.values[n - 1]