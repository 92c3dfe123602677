"""Lerch transcendent Phi(z, s, a) via truncated generalized Gauss-Laguerre quadrature."""

from .error_model import LerchParams, SizingPlan
from .errors import DomainError, EigensolverError, InvalidParameterError, NoConvergenceError, SizingOverflowError
from .lerch import (
    ComplexLerchParams,
    Evaluation,
    LerchWarning,
    dirichlet_beta,
    dirichlet_eta,
    evaluate,
    evaluate_complex,
    lerch_phi,
    polylog,
)
from .quadrature import QuadratureRule, gauss_laguerre, gauss_laguerre_truncated

__all__ = [
    "ComplexLerchParams", "DomainError", "EigensolverError", "Evaluation", "InvalidParameterError",
    "LerchParams", "LerchWarning", "NoConvergenceError", "QuadratureRule", "SizingOverflowError", "SizingPlan",
    "dirichlet_beta", "dirichlet_eta", "evaluate", "evaluate_complex", "gauss_laguerre",
    "gauss_laguerre_truncated", "lerch_phi", "polylog",
]
