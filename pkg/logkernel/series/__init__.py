"""
Series summation: term registry and summation engines.
"""

from logkernel.series.engines import (
    sum_alternating,
    sum_asymptotic_optimal,
    sum_cesaro_c1,
    sum_direct,
    sum_series,
    sum_tail_corrected,
)
from logkernel.series.terms import SeriesTerm, TermRegistry, build_term_registry, list_series, term_registry

__all__ = [
    "sum_alternating",
    "sum_asymptotic_optimal",
    "sum_cesaro_c1",
    "sum_direct",
    "sum_series",
    "sum_tail_corrected",
    "SeriesTerm",
    "TermRegistry",
    "build_term_registry",
    "list_series",
    "term_registry",
]
