"""Closed-form evaluation of cosh/sinh-weighted modified Bessel K integrals.

    F(mu, nu; z) = int_0^inf cosh^mu(t) K_nu(z cosh t) dt
    G(2n, nu; z) = int_0^inf sinh^{2n}(t) K_nu(z cosh t) dt

For integers mu, nu of opposite parity both are ``pi e^{-z}/(2^q z)`` times a
polynomial in ``1/z`` with exactly computable rational coefficients.
"""

from .closed_form import EvalResult, PolyInvZ, eval_F, eval_G, polynomial_for
from .errors import ConvergenceError, DomainError, UnsupportedCaseError, UnsupportedParityError
from .exact_coeffs import CoeffTable, IntegralSpec, Kernel, Parity, coeff_table, leading_coeff_closed
from .half_order import HalfOrderPoly, eval_k_half, k_half_poly, product_poly
from .oracle import QuadConfig, OracleResult, k_nu_numeric, oracle_F, oracle_G, product_identity_check

__version__ = "0.1.0"

__all__ = [
    "CoeffTable",
    "ConvergenceError",
    "DomainError",
    "EvalResult",
    "HalfOrderPoly",
    "IntegralSpec",
    "Kernel",
    "OracleResult",
    "Parity",
    "PolyInvZ",
    "QuadConfig",
    "UnsupportedCaseError",
    "UnsupportedParityError",
    "coeff_table",
    "eval_F",
    "eval_G",
    "eval_k_half",
    "k_half_poly",
    "k_nu_numeric",
    "leading_coeff_closed",
    "oracle_F",
    "oracle_G",
    "polynomial_for",
    "product_identity_check",
    "product_poly",
]
