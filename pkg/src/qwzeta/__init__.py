"""Exact spectral analysis and zeta functions of Hadamard and Grover walks on cycles.

The pipeline runs from the exact evolution operator ``U = SC`` over Q(sqrt 2),
through its characteristic polynomial and cyclotomic factorization, to the walk
zeta ``det(I - uU)**-1`` and the absolute zeta functions built from Barnes
multiple gamma and sine functions.
"""

__version__ = "0.1.0"

from .algebra import Poly, QuadRat, cyclotomic, euler_phi, format_quadrat, parse_quadrat
from .walks import CoinType, Family, WalkOperator, WalkSpec, build_operator, check_unitary
from .spectral import CharPoly, char_poly, char_poly_of, cross_check_factorization
from .periodicity import CoefficientRing, PeriodResult, period, strip_cyclotomics
from .walkzeta import ZetaProductForm, automorphic_weight, zeta_of_walk
from .barnes import (
    AccuracyError,
    BarnesEvalConfig,
    DomainError,
    PoleError,
    barnes_zeta,
    log_multiple_gamma,
    multiple_sine,
)
from .absolute import (
    Z_f,
    epsilon_f,
    functional_eq_residual,
    plan_absolute_zeta,
    zeta_f,
)
from .report import AnalysisReport, analyze

__all__ = [
    "AccuracyError",
    "AnalysisReport",
    "BarnesEvalConfig",
    "CharPoly",
    "CoefficientRing",
    "CoinType",
    "DomainError",
    "Family",
    "PeriodResult",
    "PoleError",
    "Poly",
    "QuadRat",
    "WalkOperator",
    "WalkSpec",
    "Z_f",
    "ZetaProductForm",
    "analyze",
    "automorphic_weight",
    "barnes_zeta",
    "build_operator",
    "char_poly",
    "char_poly_of",
    "check_unitary",
    "cross_check_factorization",
    "cyclotomic",
    "epsilon_f",
    "euler_phi",
    "format_quadrat",
    "functional_eq_residual",
    "log_multiple_gamma",
    "multiple_sine",
    "parse_quadrat",
    "period",
    "plan_absolute_zeta",
    "strip_cyclotomics",
    "zeta_f",
    "zeta_of_walk",
]
