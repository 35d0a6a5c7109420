"""
Special functions in double precision.

Modules:
    - constants: pi, gamma, ln 2, zeta(2), zeta(3)
    - gamma: gamma_ln, digamma, polygamma
    - trig_integrals: Si, si, Ci, auxiliary f and g, Ei on the imaginary axis
    - numbers: Bernoulli numbers, zeta(s > 1), dilogarithm
    - expansions: Kummer and Saalschuetz series
"""

from logkernel.specfun.constants import EULER_GAMMA, HALF_PI, LN2, PI, TWO_PI, ZETA2, ZETA3
from logkernel.specfun.numbers import (
    EXACT_LIMIT,
    K_MAX,
    bernoulli_even,
    bernoulli_even_from_zeta,
    bernoulli_number,
    bernoulli_table,
    dilog,
    odd_symbol_bernoulli,
    zeta,
)
from logkernel.specfun.gamma import digamma, gamma_ln, polygamma
from logkernel.specfun.trig_integrals import (
    aux_arrays,
    aux_f,
    aux_g,
    ci,
    ei_imag,
    si_lower,
    si_upper,
    sici_kpi,
)
from logkernel.specfun.expansions import (
    kummer_ln_gamma,
    kummer_ln_gamma_with_error,
    kummer_trig_integral,
    tanh_saalschuetz,
    tanh_saalschuetz_with_error,
)

__all__ = [
    "EULER_GAMMA",
    "HALF_PI",
    "LN2",
    "PI",
    "TWO_PI",
    "ZETA2",
    "ZETA3",
    "EXACT_LIMIT",
    "K_MAX",
    "bernoulli_even",
    "bernoulli_even_from_zeta",
    "bernoulli_number",
    "bernoulli_table",
    "dilog",
    "odd_symbol_bernoulli",
    "zeta",
    "digamma",
    "gamma_ln",
    "polygamma",
    "aux_arrays",
    "aux_f",
    "aux_g",
    "ci",
    "ei_imag",
    "si_lower",
    "si_upper",
    "sici_kpi",
    "kummer_ln_gamma",
    "kummer_ln_gamma_with_error",
    "kummer_trig_integral",
    "tanh_saalschuetz",
    "tanh_saalschuetz_with_error",
]
