"""Independent numerical oracle for ``K_nu`` and the cosh/sinh-weighted integrals.

``K_nu(x)`` comes from its integral representation

    K_nu(x) = int_0^inf exp(-x cosh u) cosh(nu u) du,     Re x > 0,

and the weighted integrals nest that inside an outer quadrature. Both levels
use globally adaptive Gauss-Kronrod 7/15 bisection on a truncated interval.

The kernels are compiled (``_ckernels``) when the extension is available and
fall back to the pure-Python twin (``_pykernels``) otherwise; ``BACKEND``
names the one picked at import time.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from ..errors import ConvergenceError, DomainError
from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

__all__ = [
    "BACKEND",
    "QuadConfig",
    "OracleResult",
    "available_backends",
    "k_nu_numeric",
    "oracle_F",
    "oracle_G",
    "product_identity_check",
]

_KERNELS = {"python": _pykernels}
if _ckernels is not None:
    _KERNELS["compiled"] = _ckernels

BACKEND = "compiled" if _ckernels is not None else "python"

_STATUS_MSG = {
    _pykernels.NO_CONVERGENCE: "tolerance not reached within max_depth (or limited by round-off)",
}


def available_backends() -> list[str]:
    return sorted(_KERNELS)


def _kernels(backend):
    name = BACKEND if backend is None else backend
    try:
        return _KERNELS[name]
    except KeyError:
        raise ValueError(
            f"unknown or unavailable backend {name!r}; have {available_backends()}"
        ) from None


@dataclass(frozen=True)
class QuadConfig:
    tol: float = 1e-10
    max_depth: int = 30
    truncation_eps: float = 1e-18

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be > 0, got {self.tol}")
        if not 0 < self.truncation_eps < self.tol:
            raise ValueError(
                f"need 0 < truncation_eps < tol (got {self.truncation_eps}, {self.tol})"
            )
        if self.max_depth < 1:
            raise ValueError(f"max_depth must be >= 1, got {self.max_depth}")


@dataclass(frozen=True)
class OracleResult:
    value: complex
    est_error: float
    evaluations: int
    config: QuadConfig = field(default_factory=QuadConfig)


def _as_z(z, what="z") -> complex:
    z = complex(z)
    if not (cmath.isfinite(z) and z.real > 0):
        raise DomainError(f"{what} must be finite with positive real part, got {z}")
    return z


def _finish(raw, cfg, what) -> OracleResult:
    re, im, err, nevals, status = raw
    res = OracleResult(complex(re, im), float(err), int(nevals), cfg)
    if status != _pykernels.OK:
        raise ConvergenceError(f"{what}: {_STATUS_MSG[status]}", best=res)
    return res


def k_nu_numeric(nu: float, x: complex, cfg: QuadConfig | None = None, *, backend=None) -> OracleResult:
    """``K_nu(x)`` by quadrature to relative tolerance ``cfg.tol``."""
    cfg = cfg or QuadConfig()
    x = _as_z(x, "x")
    nu = float(nu)
    if not math.isfinite(nu):
        raise DomainError(f"nu must be finite, got {nu}")
    raw = _kernels(backend).k_nu(
        abs(nu), x.real, x.imag, cfg.tol, cfg.max_depth, cfg.truncation_eps
    )
    return _finish(raw, cfg, f"K_{nu}({x})")


def _weighted(kind, p, nu, z, cfg, backend, what):
    cfg = cfg or QuadConfig()
    z = _as_z(z)
    nu = float(nu)
    if not math.isfinite(nu):
        raise DomainError(f"nu must be finite, got {nu}")
    raw = _kernels(backend).weighted_k_integral(
        kind, float(p), abs(nu), z.real, z.imag, cfg.tol, cfg.max_depth, cfg.truncation_eps
    )
    return _finish(raw, cfg, what)


def _check_mu(mu):
    if isinstance(mu, bool) or int(mu) != mu or mu < 0:
        raise DomainError(f"mu must be a non-negative integer, got {mu!r}")
    return int(mu)


def oracle_F(mu: int, nu: float, z: complex, cfg: QuadConfig | None = None, *, backend=None) -> OracleResult:
    """``int_0^inf cosh^mu(t) K_nu(z cosh t) dt`` by nested quadrature.

    Any real ``nu`` is accepted, unlike the closed form.
    """
    mu = _check_mu(mu)
    return _weighted(_pykernels.KIND_COSH_POW, mu, nu, z, cfg, backend, f"F({mu}, {nu}; {z})")


def oracle_G(mu: int, nu: float, z: complex, cfg: QuadConfig | None = None, *, backend=None) -> OracleResult:
    """``int_0^inf sinh^mu(t) K_nu(z cosh t) dt`` by nested quadrature."""
    mu = _check_mu(mu)
    return _weighted(_pykernels.KIND_SINH_POW, mu, nu, z, cfg, backend, f"G({mu}, {nu}; {z})")


def product_identity_check(a: float, b: float, x: complex, cfg: QuadConfig | None = None, *, backend=None) -> float:
    """Relative residual of
    ``int_0^inf cosh((a-b)t) K_{a+b}(2x cosh t) dt = K_a(x) K_b(x) / 2``,
    with both sides computed numerically."""
    x = _as_z(x, "x")
    lhs = _weighted(
        _pykernels.KIND_COSH_LIN, a - b, a + b, 2 * x, cfg, backend,
        f"product identity lhs (a={a}, b={b}, x={x})",
    ).value
    rhs = 0.5 * k_nu_numeric(a, x, cfg, backend=backend).value * k_nu_numeric(b, x, cfg, backend=backend).value
    return abs(lhs - rhs) / abs(rhs)
