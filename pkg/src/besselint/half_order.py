"""Modified Bessel functions of half-integer order.

For integer ``s >= 0``::

    K_{s+1/2}(x) = sqrt(pi / (2x)) * exp(-x) * sum_k (s+k)! / (k! (s-k)!) * (2x)**-k

so every such function is elementary. ``HalfOrderPoly`` stores the sum with
the ``2**-k`` folded into the coefficients, i.e. as a polynomial in ``1/x``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "HalfOrderPoly",
    "factorial_ratio",
    "k_half_poly",
    "eval_k_half",
    "product_poly",
]


def factorial_ratio(s: int, k: int) -> int:
    """Return ``(s+k)! / (k! (s-k)!)``, or 0 when ``k > s``."""
    if s < 0 or k < 0:
        raise DomainError(f"factorial_ratio needs s, k >= 0 (got s={s}, k={k})")
    if k > s:
        return 0
    # (s+k)!/(k!(s-k)!) = C(s+k, 2k) * (2k)!/k!
    return math.comb(s + k, 2 * k) * math.perm(2 * k, k)


@dataclass(frozen=True)
class HalfOrderPoly:
    s: int
    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> Fraction:
        return Fraction(2 * self.s + 1, 2)

    def __call__(self, x: complex) -> complex:
        return eval_k_half(self.s, x)


def k_half_poly(s: int) -> HalfOrderPoly:
    if s < 0:
        raise DomainError(f"half-order index must be >= 0, got {s}")
    coeffs = tuple(Fraction(factorial_ratio(s, k), 2**k) for k in range(s + 1))
    return HalfOrderPoly(s, coeffs)


def eval_k_half(s: int, x: complex) -> complex:
    """Evaluate ``K_{s+1/2}(x)`` for ``Re x > 0`` (principal square root)."""
    x = complex(x)
    if not x.real > 0:
        raise DomainError(f"K_(s+1/2)(x) needs Re x > 0, got x={x}")
    coeffs = [float(c) for c in k_half_poly(s).coeffs]
    w = 1 / x
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * w + c
    val = cmath.sqrt(math.pi / (2 * x)) * cmath.exp(-x) * acc
    return val


def product_poly(s1: int, s2: int) -> tuple[int, ...]:
    """Coefficients of ``K_{s1+1/2}(z/2) K_{s2+1/2}(z/2)`` in powers of ``1/z``.

    The product equals ``(pi/z) e^{-z} sum_p coeffs[p] z^{-p}``; with argument
    ``z/2`` the factors of two cancel and the coefficients are the integer
    convolution of the two factorial-ratio sequences.
    """
    if s1 < 0 or s2 < 0:
        raise DomainError(f"half-order indices must be >= 0, got {s1}, {s2}")
    a = [factorial_ratio(s1, r) for r in range(s1 + 1)]
    b = [factorial_ratio(s2, r) for r in range(s2 + 1)]
    out = [0] * (s1 + s2 + 1)
    for r, ar in enumerate(a):
        for j, bj in enumerate(b):
            out[r + j] += ar * bj
    return tuple(out)
