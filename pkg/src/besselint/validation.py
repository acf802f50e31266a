"""Verification harness: published tables, structural laws and oracle agreement."""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .closed_form import PolyInvZ, polynomial_for
from .errors import ConvergenceError
from .exact_coeffs import (
    IntegralSpec,
    Kernel,
    Parity,
    coeff_table,
    expected_degree,
    leading_coeff_closed,
)
from .oracle import QuadConfig, oracle_F, oracle_G, product_identity_check

__all__ = [
    "PUBLISHED_TABLES",
    "PUBLISHED_DISPLAYS",
    "DEFAULT_Z_GRID",
    "ORACLE_RTOL",
    "PRODUCT_RTOL",
    "CheckEntry",
    "VerifyReport",
    "verify_paper_tables",
    "verify_grid",
]

# Published coefficient lists, keyed by (mu, nu).
PUBLISHED_TABLES = {
    (4, 7): (8, 208, 2520, 17880, 76800, 184320, 184320),
    (4, 3): (8, 48, 120, 120),
}
# Published normalised forms: F = scale * pi e^{-z}/z * (1 + ...).
PUBLISHED_DISPLAYS = {
    (4, 7): (Fraction(1, 2), (1, 26, 315, 2235, 9600, 23040, 23040)),
    (4, 3): (Fraction(1, 2), (1, 6, 15, 15)),
}

DEFAULT_Z_GRID = (0.5, 1.0, 2.0, 5.0, 10.0)
ORACLE_RTOL = 1e-8
PRODUCT_RTOL = 1e-9
HALF_INTEGERS = (0.5, 1.5, 2.5, 3.5)

# canonical ordering of check kinds within a report
_CHECK_ORDER = {
    name: i
    for i, name in enumerate(
        ("published_table", "published_display", "degree", "leading_coeff",
         "sinh_constant", "oracle", "product_identity")
    )
}


@dataclass
class CheckEntry:
    check: str
    params: dict
    passed: bool
    max_residual: float
    expected: str | None = None
    actual: str | None = None

    def sort_key(self):
        p = self.params
        z = p.get("z") or p.get("x") or (0.0, 0.0)
        return (
            _CHECK_ORDER.get(self.check, len(_CHECK_ORDER)),
            p.get("variant", ""),
            p.get("mu", -1),
            p.get("nu", -1),
            p.get("a", -1),
            p.get("b", -1),
            tuple(z),
        )


@dataclass
class VerifyReport:
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def passed(self) -> int:
        return sum(e.passed for e in self.entries)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed]

    def merged(self, other: "VerifyReport") -> "VerifyReport":
        out = VerifyReport(self.entries + other.entries)
        out.entries.sort(key=CheckEntry.sort_key)
        return out

    def to_dict(self) -> dict:
        return {
            "summary": {"total": self.total, "passed": self.passed, "failed": self.failed},
            "entries": [asdict(e) for e in self.entries],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "VerifyReport":
        entries = []
        for e in data["entries"]:
            params = {k: (tuple(v) if isinstance(v, list) else v) for k, v in e["params"].items()}
            entries.append(CheckEntry(**{**e, "params": params}))
        return cls(entries)

    @classmethod
    def from_json(cls, text: str) -> "VerifyReport":
        return cls.from_dict(json.loads(text))


def _spec_params(spec: IntegralSpec) -> dict:
    return {"mu": spec.mu, "nu": spec.nu, "variant": spec.variant.value}


def _fmt(seq) -> str:
    return "[" + ", ".join(str(c) for c in seq) + "]"


def _exact_entry(check, params, expected, actual) -> CheckEntry:
    expected, actual = tuple(expected), tuple(actual)
    if len(expected) == len(actual):
        resid = max((abs(float(Fraction(a) - Fraction(b))) for a, b in zip(expected, actual)), default=0.0)
    else:
        resid = math.inf
    return CheckEntry(check, params, expected == actual, resid, _fmt(expected), _fmt(actual))


def verify_paper_tables(tables=None, displays=None) -> VerifyReport:
    """Compare exact coefficient tables with the published lists and displays."""
    tables = PUBLISHED_TABLES if tables is None else tables
    displays = PUBLISHED_DISPLAYS if displays is None else displays
    report = VerifyReport()
    for (mu, nu), expected in tables.items():
        spec = IntegralSpec(mu, nu)
        got = coeff_table(spec).coeffs
        report.entries.append(
            _exact_entry("published_table", _spec_params(spec), [Fraction(c) for c in expected], got)
        )
    for (mu, nu), (scale, expected) in displays.items():
        spec = IntegralSpec(mu, nu)
        got_scale, got = polynomial_for(spec).monic()
        report.entries.append(
            _exact_entry(
                "published_display",
                _spec_params(spec),
                [Fraction(scale)] + [Fraction(c) for c in expected],
                [got_scale] + list(got),
            )
        )
    report.entries.sort(key=CheckEntry.sort_key)
    return report


def _grid_specs(max_m: int, max_n: int) -> list[IntegralSpec]:
    specs = []
    for n in range(max_n + 1):
        for m in range(max_m + 1):
            specs.append(IntegralSpec.from_mn(Parity.EVEN_MU, n, m))
            specs.append(IntegralSpec.from_mn(Parity.ODD_MU, n, m))
            specs.append(IntegralSpec.from_mn(Parity.EVEN_MU, n, m, Kernel.SINH))
    return specs


def _structural_entries(spec: IntegralSpec) -> list[CheckEntry]:
    table = coeff_table(spec)
    params = _spec_params(spec)
    out = []
    last_nonzero = max(p for p, c in enumerate(table.coeffs) if c != 0)
    deg = expected_degree(spec)
    out.append(
        CheckEntry(
            "degree", params,
            table.degree == deg and last_nonzero == deg,
            float(abs(last_nonzero - deg)), str(deg), str(last_nonzero),
        )
    )
    lead = leading_coeff_closed(spec)
    out.append(_exact_entry("leading_coeff", params, [lead], [table.coeffs[0]]))
    if spec.variant is Kernel.SINH and spec.n >= 1:
        out.append(_exact_entry("sinh_constant", params, [0], [table.coeffs[0]]))
    return out


def _oracle_entry(spec: IntegralSpec, poly: PolyInvZ, z: complex, cfg: QuadConfig, rtol: float) -> CheckEntry:
    params = {**_spec_params(spec), "z": (z.real, z.imag)}
    closed = poly(z)
    oracle = oracle_G if spec.variant is Kernel.SINH else oracle_F
    try:
        ref = oracle(spec.mu, spec.nu, z, cfg).value
        converged = True
    except ConvergenceError as exc:
        ref = exc.best.value
        converged = False
    resid = abs(closed - ref) / abs(ref) if ref != 0 else abs(closed)
    if not math.isfinite(resid):
        resid = math.inf
    return CheckEntry(
        "oracle", params, converged and resid <= rtol, resid, repr(ref), repr(closed)
    )


def _product_entry(a: float, b: float, x: complex, cfg: QuadConfig, rtol: float) -> CheckEntry:
    params = {"a": a, "b": b, "x": (x.real, x.imag)}
    try:
        resid = product_identity_check(a, b, x, cfg)
        ok = resid <= rtol
    except ConvergenceError:
        resid, ok = math.inf, False
    return CheckEntry("product_identity", params, ok, resid)


def verify_grid(
    max_m: int,
    max_n: int,
    z_grid=DEFAULT_Z_GRID,
    cfg: QuadConfig | None = None,
    *,
    product_x=(1.0, 2.0),
    rtol: float = ORACLE_RTOL,
    product_rtol: float = PRODUCT_RTOL,
    workers: int | None = None,
) -> VerifyReport:
    """Structural and oracle checks for every ``0 <= m <= max_m``, ``0 <= n <= max_n``.

    Oracle checks run on a thread pool (the compiled kernels release the GIL);
    entries are returned in canonical order whatever the execution order.
    """
    cfg = cfg or QuadConfig()
    zs = [complex(z) for z in z_grid]
    xs = [complex(x) for x in product_x]
    report = VerifyReport()
    tasks = []
    for spec in _grid_specs(max_m, max_n):
        report.entries.extend(_structural_entries(spec))
        poly = polynomial_for(spec)
        tasks.extend((_oracle_entry, spec, poly, z, cfg, rtol) for z in zs)
    for a in HALF_INTEGERS:
        for b in HALF_INTEGERS:
            tasks.extend((_product_entry, a, b, x, cfg, product_rtol) for x in xs)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        report.entries.extend(pool.map(lambda t: t[0](*t[1:]), tasks))
    report.entries.sort(key=CheckEntry.sort_key)
    return report
