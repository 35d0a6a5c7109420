"""
Identity catalog: registry rows, lemma routines and evaluation.
"""

from logkernel.catalog.evaluate import check_params, evaluate_value, lhs_value, rhs_value
from logkernel.catalog.lemmas import (
    ROUTINES,
    moment_integral,
    summation_formula,
    summation_formula_result,
    zeta3_chain,
)
from logkernel.catalog.registry import (
    build_registry,
    get_identity,
    list_identities,
    registry_document,
)

__all__ = [
    "check_params",
    "evaluate_value",
    "lhs_value",
    "rhs_value",
    "ROUTINES",
    "moment_integral",
    "summation_formula",
    "summation_formula_result",
    "zeta3_chain",
    "build_registry",
    "get_identity",
    "list_identities",
    "registry_document",
]
