"""
Data Models for logkernel

Modules:
    - specfun: ComplexPair, BernoulliTable
    - quadrature: QuadConfig, QuadResult
    - series: SeriesSpec, SumResult, SumConfig
    - expressions: closed-form expression trees
    - catalog: IntegrandSpec, ValueExpr variants, Identity
    - verification: VerificationResult, hunt report models
"""

from logkernel.models.specfun import BernoulliConvention, BernoulliTable, ComplexPair
from logkernel.models.quadrature import QuadConfig, QuadResult, Regularization, combine_results
from logkernel.models.series import EvaluationMode, SeriesSpec, SumConfig, SumMode, SumResult
from logkernel.models.catalog import (
    ClosedForm,
    ComputedLhs,
    Identity,
    IntegrandSpec,
    LhsSpec,
    ParamDomain,
    RationalConstant,
    SeriesExpr,
    ValueExpr,
)
from logkernel.models.verification import (
    CSV_COLUMNS,
    HuntEntry,
    HuntPoint,
    HuntReport,
    RemarkFit,
    VerificationResult,
    Verdict,
)

__all__ = [
    # Special functions
    "BernoulliConvention",
    "BernoulliTable",
    "ComplexPair",
    # Quadrature
    "QuadConfig",
    "QuadResult",
    "Regularization",
    "combine_results",
    # Series
    "EvaluationMode",
    "SeriesSpec",
    "SumConfig",
    "SumMode",
    "SumResult",
    # Catalog
    "ClosedForm",
    "ComputedLhs",
    "Identity",
    "IntegrandSpec",
    "LhsSpec",
    "ParamDomain",
    "RationalConstant",
    "SeriesExpr",
    "ValueExpr",
    # Verification
    "CSV_COLUMNS",
    "HuntEntry",
    "HuntPoint",
    "HuntReport",
    "RemarkFit",
    "VerificationResult",
    "Verdict",
]
