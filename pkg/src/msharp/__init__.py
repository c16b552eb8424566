"""Exact q-series engine for canonical bases of weakly holomorphic modular
forms in genus-zero prime power levels, with machine-checked duality and
congruence sweeps."""

from ._backend import BACKEND
from .arith import divisors, legendre, padic_val, sigma
from .basis import (
    FAMILY_M,
    FAMILY_S,
    BasisElement,
    a_coeff,
    b_coeff,
    basis_element,
    clear_basis_cache,
    f_element,
    first_m_element,
    first_s_element,
    g_element,
    pole_order_min,
)
from .eta import (
    EtaQuotientSpec,
    delta,
    eisenstein4,
    eisenstein6,
    eta_quotient,
    eta_tail,
    j_series,
)
from .levels import (
    FULL_LEVELS,
    SUPPORTED_LEVELS,
    LevelData,
    cusp_poly,
    cusp_product_series,
    e2_25,
    hauptmodul,
    level_data,
    weight_raiser,
)
from .series import (
    NotInvertibleError,
    PrecisionError,
    QSeries,
    congruent_mod,
    equal_on_common_window,
    make_series,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BasisElement",
    "EtaQuotientSpec",
    "FAMILY_M",
    "FAMILY_S",
    "FULL_LEVELS",
    "LevelData",
    "NotInvertibleError",
    "PrecisionError",
    "QSeries",
    "SUPPORTED_LEVELS",
    "a_coeff",
    "b_coeff",
    "basis_element",
    "clear_basis_cache",
    "congruent_mod",
    "cusp_poly",
    "cusp_product_series",
    "delta",
    "divisors",
    "e2_25",
    "eisenstein4",
    "eisenstein6",
    "equal_on_common_window",
    "eta_quotient",
    "eta_tail",
    "f_element",
    "first_m_element",
    "first_s_element",
    "g_element",
    "hauptmodul",
    "j_series",
    "legendre",
    "level_data",
    "make_series",
    "padic_val",
    "pole_order_min",
    "sigma",
    "weight_raiser",
]
