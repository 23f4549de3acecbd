"""Exact Hankel determinants of C-fractions and their orthogonal-type polynomials."""

from .catalog import (
    bseq_family,
    builtin_series,
    numerator_rule,
    power_family,
    qbinomial,
    reconstruct_cfrac,
)
from .cfrac import (
    BSeq,
    CFrac,
    bseq_to_powers,
    cfrac_expand,
    convergents,
    jfraction_expand,
    powers_to_bseq,
)
from .closedform import (
    SignedMonomial,
    buslaev_d,
    family_formula,
    predicted_transform,
    random_bseq,
    step_recursion_check,
    transform_support,
)
from .errors import (
    DepthOutOfRange,
    IndexOutOfRange,
    InsufficientDepth,
    InsufficientLength,
    InsufficientOrder,
    InvalidBSeq,
    NonUnitConstantTerm,
    ParamOutOfRange,
    UnknownName,
    UnsupportedFamily,
    ZeroDeterminant,
)
from .exactalg import InexactDivision, Ring, RingMismatch, Scalar, det_fraction_free, scalar_exact_div
from .hankel import condensation_check, hankel_det, hankel_matrix, hankel_transform, verify_reduction
from .orthopoly import (
    MomentFunctional,
    fibonacci_poly,
    lambda_apply,
    p_poly,
    p_poly_cross,
    r_poly,
    p_relations,
)
from .series import QQ, PowerSeries, XPoly, series_reciprocal

__version__ = "0.1.0"

__all__ = [
    "BSeq",
    "bseq_family",
    "bseq_to_powers",
    "builtin_series",
    "buslaev_d",
    "CFrac",
    "cfrac_expand",
    "condensation_check",
    "convergents",
    "DepthOutOfRange",
    "det_fraction_free",
    "family_formula",
    "fibonacci_poly",
    "hankel_det",
    "hankel_matrix",
    "hankel_transform",
    "IndexOutOfRange",
    "InexactDivision",
    "InsufficientDepth",
    "InsufficientLength",
    "InsufficientOrder",
    "InvalidBSeq",
    "jfraction_expand",
    "lambda_apply",
    "MomentFunctional",
    "NonUnitConstantTerm",
    "numerator_rule",
    "p_poly",
    "p_poly_cross",
    "p_relations",
    "ParamOutOfRange",
    "power_family",
    "powers_to_bseq",
    "PowerSeries",
    "predicted_transform",
    "qbinomial",
    "QQ",
    "r_poly",
    "random_bseq",
    "reconstruct_cfrac",
    "Ring",
    "RingMismatch",
    "Scalar",
    "scalar_exact_div",
    "series_reciprocal",
    "SignedMonomial",
    "step_recursion_check",
    "transform_support",
    "UnknownName",
    "UnsupportedFamily",
    "verify_reduction",
    "XPoly",
    "ZeroDeterminant",
]
