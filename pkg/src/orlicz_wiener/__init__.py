"""Norms and factorization in the algebra of integrable functions whose
Fourier coefficient sides lie in two-weighted Orlicz sequence spaces."""

from .errors import (
    DomainError,
    IndexObstructionError,
    InvalidWeightError,
    NoLogarithmError,
    OrliczWienerError,
    SpecError,
    TruncationError,
    UnderResolvedError,
    VanishingSymbolError,
)
from .orlicz import (
    NEGATIVE_SIDE,
    NONNEGATIVE_SIDE,
    OrliczFunction,
    WeightSequence,
    luxemburg_norm,
    modular,
    validate_weight,
)
from .fourier import GridSamples, LaurentPolynomial, fourier_coefficients, sample
from .algebra import (
    AlgebraSpace,
    InequalityWitness,
    NormReport,
    horbach_norm,
    random_element,
    theorem_constant,
    verify_coefficient_bound,
    verify_one_sided,
    verify_theorem,
    verify_weight_shift,
    wnf_norm,
)
from .factorization import (
    FactorizationResult,
    WindingDiagnostics,
    factorize,
    log_symbol,
    membership,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [
    "OrliczWienerError", "DomainError", "SpecError", "InvalidWeightError",
    "VanishingSymbolError", "UnderResolvedError", "NoLogarithmError",
    "IndexObstructionError", "TruncationError",
    "NEGATIVE_SIDE", "NONNEGATIVE_SIDE",
    "OrliczFunction", "WeightSequence", "modular", "luxemburg_norm",
    "validate_weight",
    "LaurentPolynomial", "GridSamples", "sample", "fourier_coefficients",
    "AlgebraSpace", "NormReport", "InequalityWitness",
    "wnf_norm", "theorem_constant", "verify_theorem", "verify_one_sided",
    "verify_coefficient_bound", "verify_weight_shift", "horbach_norm",
    "random_element",
    "WindingDiagnostics", "FactorizationResult",
    "winding_number", "log_symbol", "factorize", "membership",
]
