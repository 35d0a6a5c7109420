"""
Verification Models for logkernel

Models:
    - VerificationResult: one LHS-vs-RHS comparison with verdict
    - HuntPoint / HuntEntry / HuntReport: table-entry adjudication
    - RemarkFit: fitted constant of the log-ratio remark
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field

from logkernel.models.quadrature import Regularization
from logkernel.models.series import ParamValue


Verdict = Literal["pass", "fail", "inconclusive", "unsupported_convention"]

HuntConvention = Literal["modern", "archaic", "both"]

# Fixed CSV column order
CSV_COLUMNS: tuple[str, ...] = (
    "identity_id",
    "params",
    "lhs",
    "lhs_err",
    "rhs",
    "rhs_err",
    "abs_diff",
    "rel_diff",
    "tol",
    "verdict",
    "mode_notes",
    "elapsed_ms",
)


class VerificationResult(BaseModel):
    """
    One comparison of a left-hand side against one right-hand-side variant.

    Numeric fields are None when the value could not be computed (the
    verdict is then inconclusive and mode_notes carries the reason).
    """

    identity_id: str = Field(description="Registry id")
    params: dict[str, ParamValue] = Field(default_factory=dict, description="Parameter point")
    variant: str = Field(default="", description="LHS/RHS pairing label")
    lhs: Optional[float] = Field(default=None, description="LHS estimate")
    lhs_err: Optional[float] = Field(default=None, description="LHS error estimate")
    rhs: Optional[float] = Field(default=None, description="RHS estimate")
    rhs_err: Optional[float] = Field(default=None, description="RHS error estimate")
    abs_diff: Optional[float] = Field(default=None, description="|lhs - rhs|")
    rel_diff: Optional[float] = Field(default=None, description="abs_diff / |rhs|")
    tol: float = Field(description="Requested tolerance")
    verdict: Verdict = Field(description="Outcome")
    mode_notes: str = Field(default="", description="Engines used, warnings, fitted constants")
    elapsed_ms: int = Field(default=0, ge=0, description="Wall time (0 unless timing is enabled)")

    class Config:
        json_schema_extra = {
            "example": {
                "identity_id": "main-13",
                "params": {},
                "variant": "lhs(0,1) vs 1/24",
                "lhs": 0.041666666666666664,
                "lhs_err": 3.1e-15,
                "rhs": 0.041666666666666664,
                "rhs_err": 0.0,
                "abs_diff": 0.0,
                "rel_diff": 0.0,
                "tol": 1e-9,
                "verdict": "pass",
                "mode_notes": "lhs(0,1) vs 1/24; rhs=rational",
                "elapsed_ms": 0,
            }
        }


class HuntPoint(BaseModel):
    """Measured LHS at one parameter point with a verdict per convention."""

    params: dict[str, ParamValue] = Field(default_factory=dict)
    lhs: Optional[float] = Field(default=None, description="Measured LHS")
    lhs_err: Optional[float] = Field(default=None, description="LHS error estimate")
    regularization: Regularization = Field(default="none")
    claimed: dict[str, Optional[float]] = Field(default_factory=dict, description="RHS per convention")
    claimed_err: dict[str, Optional[float]] = Field(default_factory=dict)
    verdicts: dict[str, Verdict] = Field(default_factory=dict, description="Verdict per convention")
    notes: list[str] = Field(default_factory=list)


class HuntEntry(BaseModel):
    """One Table-129 entry."""

    entry: int = Field(ge=1, le=17, description="Entry number in the table")
    identity_id: str
    statement: str = Field(description="LHS description")
    uses_odd_bernoulli: bool = Field(default=False)
    points: list[HuntPoint] = Field(default_factory=list)
    summary: str = Field(default="", description="Adjudication in one line")


class RemarkFit(BaseModel):
    """Measured log-ratio integral over one half-line with the fitted c in c/n."""

    n: int = Field(ge=1)
    interval: str = Field(description="(0,1) or (1,inf)")
    lhs: Optional[float] = None
    lhs_err: Optional[float] = None
    fitted_c: Optional[float] = Field(default=None, description="n * lhs")
    claimed_c: float = Field(default=2.0, description="Constant claimed for c")


class HuntReport(BaseModel):
    """Adjudication of every Table-129 entry, plus the log-ratio remark fit."""

    convention: HuntConvention
    tol: float
    entries: list[HuntEntry] = Field(default_factory=list)
    remark: list[RemarkFit] = Field(default_factory=list)

    def verdicts(self) -> list[Verdict]:
        return [v for e in self.entries for p in e.points for v in p.verdicts.values()]
