"""Closed-form evaluation of the weighted K integrals.

Both integrals are ``pi e^{-z} / (2^q z)`` times a polynomial in ``w = 1/z``
with the exact coefficients from :mod:`besselint.exact_coeffs`. The
polynomial is evaluated by Horner's rule in ``w``; the exact coefficients are
rounded to floats only at that point.

No exponentially scaled variant is offered: ``e^{-z}`` underflows for
``Re z`` beyond about 745 and the result is then 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UnsupportedCaseError
from .exact_coeffs import IntegralSpec, Kernel, coeff_table

__all__ = ["PolyInvZ", "EvalResult", "polynomial_for", "horner", "eval_F", "eval_G"]


def horner(coeffs, w: complex) -> complex:
    """``sum_p coeffs[p] * w**p``."""
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * w + c
    return acc


@dataclass(frozen=True)
class PolyInvZ:
    """``pi e^{-z} / (2**prefactor_pow2 * z) * sum_p coeffs[p] z^{-p}``.

    Coefficients are kept exactly as tabulated (no common-factor reduction).
    """

    coeffs: tuple[Fraction, ...]
    prefactor_pow2: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def monic(self) -> tuple[Fraction, tuple[Fraction, ...]]:
        """Split off the constant term: returns ``(scale, coeffs)`` with
        ``coeffs[0] == 1`` and value ``scale * pi e^{-z}/z * sum coeffs[p] z^{-p}``."""
        lead = self.coeffs[0]
        if lead == 0:
            raise ValueError("polynomial has zero constant term")
        return lead / 2**self.prefactor_pow2, tuple(c / lead for c in self.coeffs)

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        p = horner([float(c) for c in self.coeffs], 1 / z)
        return math.pi * cmath.exp(-z) / (2.0**self.prefactor_pow2 * z) * p


@dataclass(frozen=True)
class EvalResult:
    value: complex
    spec: IntegralSpec
    z: complex


def polynomial_for(spec: IntegralSpec) -> PolyInvZ:
    table = coeff_table(spec)
    return PolyInvZ(table.coeffs, table.prefactor_pow2)


def _check_z(z) -> complex:
    z = complex(z)
    if not (cmath.isfinite(z) and z.real > 0):
        raise DomainError(f"z must be finite with positive real part, got {z}")
    return z


def eval_F(mu: int, nu: int, z: complex) -> EvalResult:
    """``int_0^inf cosh^mu(t) K_nu(z cosh t) dt`` for integers of opposite parity."""
    spec = IntegralSpec(mu, nu, Kernel.COSH)
    z = _check_z(z)
    return EvalResult(polynomial_for(spec)(z), spec, z)


def eval_G(mu: int, nu: int, z: complex) -> EvalResult:
    """``int_0^inf sinh^mu(t) K_nu(z cosh t) dt`` for even ``mu`` and odd ``nu``."""
    if mu % 2 or abs(nu) % 2 == 0:
        raise UnsupportedCaseError(
            f"sinh kernel needs even mu and odd nu (got mu={mu}, nu={nu})"
        )
    spec = IntegralSpec(mu, nu, Kernel.SINH)
    z = _check_z(z)
    return EvalResult(polynomial_for(spec)(z), spec, z)
