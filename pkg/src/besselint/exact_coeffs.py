"""Exact coefficient tables for the cosh/sinh-weighted K integrals.

For non-negative integers ``n, m`` the integrals

    F(2n, 2m+1; z) = int_0^inf cosh^{2n} t K_{2m+1}(z cosh t) dt
    F(2n+1, 2m; z) = int_0^inf cosh^{2n+1} t K_{2m}(z cosh t) dt
    G(2n, 2m+1; z) = int_0^inf sinh^{2n} t K_{2m+1}(z cosh t) dt

reduce to ``pi e^{-z} / (2^q z)`` times a polynomial in ``1/z``. Expanding the
hyperbolic power into ``cosh(jt)`` terms turns each piece into a product of
two half-integer order K functions at ``z/2``, each of which is a finite sum.
The polynomial coefficients are therefore binomial-weighted convolutions of
factorial ratios, all computed here in exact integer/rational arithmetic.

Naming of the four coefficient families follows the (parity of mu) x
(sign of m - n) split:

    ========  ===========  =========================  ==========
    family    mu           condition                  degree
    ========  ===========  =========================  ==========
    C         even (2n)    m >= n                     2m
    D         even (2n)    m < n                      2n - 1
    Chat      odd (2n+1)   m > n                      2m - 1
    Dhat      odd (2n+1)   m <= n                     2n
    ========  ===========  =========================  ==========
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UnsupportedCaseError, UnsupportedParityError
from .half_order import factorial_ratio

__all__ = [
    "Kernel",
    "Parity",
    "Family",
    "IntegralSpec",
    "CoeffTable",
    "a_coeff",
    "b_coeff",
    "bhat_coeff",
    "convolve_cp",
    "convolve_dp",
    "convolve_chat_p",
    "convolve_dhat_p",
    "coeff_table",
    "leading_coeff_closed",
    "pochhammer",
    "expected_degree",
]


class Kernel(enum.Enum):
    COSH = "cosh"
    SINH = "sinh"


class Parity(enum.Enum):
    EVEN_MU = "even_mu"  # mu = 2n, nu = 2m + 1
    ODD_MU = "odd_mu"  # mu = 2n + 1, nu = 2m


class Family(enum.Enum):
    C = "C"
    D = "D"
    CHAT = "Chat"
    DHAT = "Dhat"


@dataclass(frozen=True)
class IntegralSpec:
    """Which integral: kernel, exponent ``mu`` and Bessel order ``nu``.

    A negative ``nu`` is replaced by ``|nu|`` (``K_{-nu} = K_nu``).
    """

    mu: int
    nu: int
    variant: Kernel = Kernel.COSH

    def __post_init__(self):
        for name in ("mu", "nu"):
            val = getattr(self, name)
            if isinstance(val, bool) or int(val) != val:
                raise DomainError(f"{name} must be an integer, got {val!r}")
        object.__setattr__(self, "mu", int(self.mu))
        object.__setattr__(self, "nu", abs(int(self.nu)))
        object.__setattr__(self, "variant", Kernel(self.variant))
        if self.mu < 0:
            raise DomainError(f"mu must be >= 0, got {self.mu}")
        if (self.mu + self.nu) % 2 == 0:
            raise UnsupportedParityError()
        if self.variant is Kernel.SINH and self.mu % 2 == 1:
            raise UnsupportedCaseError(
                "sinh kernel is only supported for even mu and odd nu"
            )

    @property
    def case(self) -> Parity:
        return Parity.EVEN_MU if self.mu % 2 == 0 else Parity.ODD_MU

    @property
    def n(self) -> int:
        return self.mu // 2

    @property
    def m(self) -> int:
        return self.nu // 2

    @property
    def family(self) -> Family:
        n, m = self.n, self.m
        if self.case is Parity.EVEN_MU:
            return Family.C if m >= n else Family.D
        return Family.CHAT if m > n else Family.DHAT

    @property
    def prefactor_pow2(self) -> int:
        return self.mu

    @classmethod
    def from_mn(cls, case: Parity, n: int, m: int, variant=Kernel.COSH) -> "IntegralSpec":
        if n < 0 or m < 0:
            raise DomainError(f"n, m must be >= 0, got n={n}, m={m}")
        if Parity(case) is Parity.EVEN_MU:
            return cls(2 * n, 2 * m + 1, variant)
        return cls(2 * n + 1, 2 * m, variant)


@dataclass(frozen=True)
class CoeffTable:
    """Coefficients ``coeffs[p]`` of ``z^{-p}``; the integral equals
    ``pi e^{-z} / (2**prefactor_pow2 * z) * sum_p coeffs[p] z^{-p}``."""

    spec: IntegralSpec
    coeffs: tuple[Fraction, ...]
    degree: int
    prefactor_pow2: int

    @property
    def family(self) -> Family:
        return self.spec.family


def _check_nonneg(**kw):
    for name, val in kw.items():
        if val < 0:
            raise DomainError(f"{name} must be >= 0, got {val}")


def _check_k(n, k):
    if not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= n (got k={k}, n={n})")


def _flipped_index(m: int, n: int, j: int) -> int:
    """Index ``S`` with ``K_{m-n+j+1/2} = K_{S+1/2}``, ``S >= 0``."""
    d = m - n + j
    return d if d >= 0 else -d - 1


def a_coeff(m: int, n: int, k: int, r: int) -> int:
    _check_nonneg(m=m, n=n, k=k, r=r)
    _check_k(n, k)
    return factorial_ratio(m + n - k, r)


def b_coeff(m: int, n: int, k: int, s: int) -> int:
    _check_nonneg(m=m, n=n, k=k, s=s)
    _check_k(n, k)
    if m - n + k < 0:
        raise DomainError(
            f"b_s needs m - n + k >= 0 (got {m - n + k}); use bhat_coeff"
        )
    return factorial_ratio(m - n + k, s)


def bhat_coeff(m: int, n: int, k: int, s: int) -> int:
    """Second-factor coefficient with the order reflected when it is negative.

    ``k <= n-m-1`` uses index ``n-m-k-1``; ``k >= n-m`` uses ``m-n+k``.
    """
    _check_nonneg(m=m, n=n, k=k, s=s)
    _check_k(n, k)
    if m >= n:
        raise DomainError(f"bhat_coeff applies to m < n (got m={m}, n={n})")
    return factorial_ratio(_flipped_index(m, n, k), s)


def _convolve(A: int, B: int, p: int) -> int:
    # sum_{r+s=p} ratio(A, r) * ratio(B, s); terms outside [0, A] x [0, B] vanish
    lo, hi = max(0, p - B), min(p, A)
    return sum(factorial_ratio(A, r) * factorial_ratio(B, p - r) for r in range(lo, hi + 1))


def convolve_cp(m: int, n: int, k: int, p: int) -> int:
    _check_nonneg(m=m, n=n, k=k, p=p)
    _check_k(n, k)
    if m < n:
        raise DomainError(f"c_p(k) needs m >= n (got m={m}, n={n}); use convolve_dp")
    return _convolve(m + n - k, m - n + k, p)


def convolve_dp(m: int, n: int, k: int, p: int) -> int:
    _check_nonneg(m=m, n=n, k=k, p=p)
    _check_k(n, k)
    if m >= n:
        raise DomainError(f"d_p(k) needs m < n (got m={m}, n={n}); use convolve_cp")
    return _convolve(m + n - k, _flipped_index(m, n, k), p)


def convolve_chat_p(m: int, n: int, k: int, p: int) -> int:
    _check_nonneg(m=m, n=n, k=k, p=p)
    _check_k(n, k)
    if m <= n:
        raise DomainError(
            f"chat_p(k) needs m > n (got m={m}, n={n}); use convolve_dhat_p"
        )
    return _convolve(m + n - k, m - n + k - 1, p)


def convolve_dhat_p(m: int, n: int, k: int, p: int) -> int:
    # second order is m-n+k-1/2, i.e. the even-mu rule shifted by k -> k-1;
    # at k = n-m it is -1/2 and reflects to +1/2
    _check_nonneg(m=m, n=n, k=k, p=p)
    _check_k(n, k)
    if m > n:
        raise DomainError(
            f"dhat_p(k) needs m <= n (got m={m}, n={n}); use convolve_chat_p"
        )
    return _convolve(m + n - k, _flipped_index(m, n, k - 1), p)


_CONVOLVERS = {
    Family.C: convolve_cp,
    Family.D: convolve_dp,
    Family.CHAT: convolve_chat_p,
    Family.DHAT: convolve_dhat_p,
}


def expected_degree(spec: IntegralSpec) -> int:
    """Degree in ``1/z`` of the polynomial for ``spec``."""
    n, m = spec.n, spec.m
    return {
        Family.C: 2 * m,
        Family.D: 2 * n - 1,
        Family.CHAT: 2 * m - 1,
        Family.DHAT: 2 * n,
    }[spec.family]


def _binomial_weights(spec: IntegralSpec) -> list[Fraction]:
    n = spec.n
    if spec.case is Parity.ODD_MU:
        return [Fraction(math.comb(2 * n + 1, k)) for k in range(n + 1)]
    sign = -1 if spec.variant is Kernel.SINH else 1
    w = [Fraction(sign**k * math.comb(2 * n, k)) for k in range(n + 1)]
    w[n] /= 2
    return w


def coeff_table(spec: IntegralSpec) -> CoeffTable:
    """Exact polynomial coefficients for the integral described by ``spec``."""
    conv = _CONVOLVERS[spec.family]
    weights = _binomial_weights(spec)
    deg = expected_degree(spec)
    m, n = spec.m, spec.n
    coeffs = tuple(
        sum((w * conv(m, n, k, p) for k, w in enumerate(weights)), Fraction(0))
        for p in range(deg + 1)
    )
    return CoeffTable(spec, coeffs, deg, spec.prefactor_pow2)


def pochhammer(x: Fraction, n: int) -> Fraction:
    """Rising factorial ``(x)_n``."""
    if n < 0:
        raise DomainError(f"pochhammer needs n >= 0, got {n}")
    out = Fraction(1)
    for j in range(n):
        out *= x + j
    return out


def leading_coeff_closed(spec: IntegralSpec) -> Fraction:
    """Constant term of the polynomial from its closed form, independent of m."""
    n = spec.n
    # sinh^0 = cosh^0, so the alternating sum vanishes only from n = 1 on
    if spec.variant is Kernel.SINH and n >= 1:
        return Fraction(0)
    if spec.case is Parity.ODD_MU:
        return Fraction(4**n)
    half = pochhammer(Fraction(1, 2), n)
    return 4**n - math.factorial(n) / (2 * half) * math.comb(2 * n, n)
