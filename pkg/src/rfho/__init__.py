"""Exact factorization toolkit for the fractional quantum oscillator.

Symbolic k-space polynomial families and local eigenvalues with rational
coefficients, operator-algebra factorization remainders, hypergeometric
closed forms, and quadrature transforms back to the x axis.
"""

from .hermite import (
    RFHermite,
    StructureError,
    extract_p_coefficients,
    ladder_next,
    leading_term_checks,
    rf_hermite,
    rodrigues,
    standard_reduction,
)
from .hyper import (
    ClosedFormPsi0,
    ClosedFormTerm,
    ConvergenceError,
    PFQSpec,
    PoleError,
    UnsupportedAlpha,
    closed_form_psi0,
    closed_form_term_values,
    eval_closed_form,
    gaussian_via_pfq,
    pfq,
    pfq_mp,
)
from .kterms import (
    ALPHA,
    AlphaPoly,
    DomainError,
    FixedKExpr,
    FixedKTerm,
    FracExponent,
    KExpr,
    KTerm,
)
from .operators import (
    ComplexFixed,
    FourierRemainder,
    OpExpr,
    OpWord,
    compose_factorization,
    fourier_remainder,
    lowering_op,
    normal_order,
    oscillator_op,
    raising_op,
    remainder_forward_closed,
    remainder_reverted_closed,
    reverted_factorization,
    scaled_remainder,
)
from .spectral import (
    KState,
    LocalEigenvalue,
    SymbolSpec,
    excited_state,
    ground_kernel_residual,
    ground_state,
    kernel_residual_at,
    local_eigenvalue,
    sample_local_eigenvalue,
    symbol_derivative,
    symbol_eval,
)
from .transform import (
    Grid,
    QuadratureConfig,
    QuadratureError,
    inverse_fourier,
    nongaussianity_k,
    nongaussianity_x,
)
from .validation import CriterionResult, run_all

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "AlphaPoly",
    "ClosedFormPsi0",
    "ClosedFormTerm",
    "ComplexFixed",
    "ConvergenceError",
    "CriterionResult",
    "DomainError",
    "FixedKExpr",
    "FixedKTerm",
    "FourierRemainder",
    "FracExponent",
    "Grid",
    "KExpr",
    "KState",
    "KTerm",
    "LocalEigenvalue",
    "OpExpr",
    "OpWord",
    "PFQSpec",
    "PoleError",
    "QuadratureConfig",
    "QuadratureError",
    "RFHermite",
    "StructureError",
    "SymbolSpec",
    "UnsupportedAlpha",
    "compose_factorization",
    "closed_form_psi0",
    "closed_form_term_values",
    "eval_closed_form",
    "excited_state",
    "extract_p_coefficients",
    "fourier_remainder",
    "gaussian_via_pfq",
    "ground_kernel_residual",
    "ground_state",
    "inverse_fourier",
    "kernel_residual_at",
    "ladder_next",
    "leading_term_checks",
    "local_eigenvalue",
    "lowering_op",
    "nongaussianity_k",
    "nongaussianity_x",
    "normal_order",
    "oscillator_op",
    "pfq",
    "pfq_mp",
    "raising_op",
    "remainder_forward_closed",
    "remainder_reverted_closed",
    "reverted_factorization",
    "rf_hermite",
    "rodrigues",
    "run_all",
    "sample_local_eigenvalue",
    "scaled_remainder",
    "standard_reduction",
    "symbol_derivative",
    "symbol_eval",
]
