"""Command-line front end: ``besselint {coeffs,eval,oracle,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
3 quadrature convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import validation
from .closed_form import eval_F, eval_G
from .errors import ConvergenceError, DomainError, UnsupportedCaseError
from .exact_coeffs import IntegralSpec, coeff_table
from .oracle import BACKEND, QuadConfig, oracle_F, oracle_G

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3

_COMMON_DEFAULTS = {"variant": "cosh", "format": "text", "tol": 1e-10}


class _UsageError(Exception):
    pass


def parse_z(text: str, zi: float | None = None) -> complex:
    """Parse ``RE[+IMi]`` (``j`` also accepted); ``zi`` overrides the imaginary part."""
    s = text.strip().replace(" ", "").replace("I", "i").replace("J", "j")
    if s.endswith("i"):
        s = s[:-1] + "j"
    try:
        z = complex(s)
    except ValueError:
        raise _UsageError(f"cannot parse complex number {text!r}; expected RE[+IMi]") from None
    if zi is not None:
        z = complex(z.real, zi)
    return z


def _common_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--variant", choices=["cosh", "sinh"], default=argparse.SUPPRESS,
                   help="kernel: cosh^mu (F) or sinh^mu (G); default cosh")
    p.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS,
                   help="output format; default text")
    p.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                   help="oracle relative tolerance; default 1e-10")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="besselint",
        description="Closed forms and quadrature for int_0^inf cosh^mu(t) K_nu(z cosh t) dt.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="exact polynomial coefficients")
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate the closed form")
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--z", required=True, help="RE[+IMi]")
    p.add_argument("--zi", type=float, default=None, help="imaginary part of z")

    p = sub.add_parser("oracle", parents=[common], help="evaluate by quadrature")
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--nu", type=float, required=True, help="any real order")
    p.add_argument("--z", required=True, help="RE[+IMi]")
    p.add_argument("--zi", type=float, default=None, help="imaginary part of z")

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--z-grid", default=None,
                   help="comma-separated z values, e.g. '0.5,1,2,5,10,2+1i'")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--all", action="store_true", help="list passing checks too (text format)")
    return parser


def _rows_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_coeffs(args) -> int:
    spec = IntegralSpec(args.mu, args.nu, args.variant)
    table = coeff_table(spec)
    coeffs = [str(c) for c in table.coeffs]
    if args.format == "json":
        print(json.dumps({
            "mu": spec.mu,
            "nu": spec.nu,
            "variant": spec.variant.value,
            "prefactor_pow2": table.prefactor_pow2,
            "degree": table.degree,
            "coeffs": coeffs,
        }))
    elif args.format == "csv":
        sys.stdout.write(_rows_csv(["p", "coeff"], enumerate(coeffs)))
    else:
        print(f"mu={spec.mu} nu={spec.nu} variant={spec.variant.value} "
              f"family={spec.family.value} degree={table.degree} "
              f"prefactor=pi*exp(-z)/(2^{table.prefactor_pow2}*z)")
        for p, c in enumerate(coeffs):
            print(f"{p:4d}  {c}")
    return EXIT_OK


def _emit_value(args, value: complex, est_error, spec: dict) -> None:
    if args.format == "json":
        print(json.dumps({
            "value_re": value.real,
            "value_im": value.imag,
            "est_error": est_error,
            "spec": spec,
        }))
    elif args.format == "csv":
        sys.stdout.write(_rows_csv(
            ["value_re", "value_im", "est_error"],
            [[f"{value.real:.15e}", f"{value.imag:.15e}", "" if est_error is None else f"{est_error:.3e}"]],
        ))
    else:
        text = f"{value.real:.15e}"
        if value.imag != 0.0:
            text += f" {'+' if value.imag >= 0 else '-'} {abs(value.imag):.15e}i"
        if est_error is not None:
            text += f"  +/- {est_error:.3e}"
        print(text)


def cmd_eval(args) -> int:
    z = parse_z(args.z, args.zi)
    fn = eval_G if args.variant == "sinh" else eval_F
    res = fn(args.mu, args.nu, z)
    _emit_value(args, res.value, None, {
        "mu": res.spec.mu, "nu": res.spec.nu, "variant": res.spec.variant.value,
        "z_re": z.real, "z_im": z.imag, "method": "closed_form",
    })
    return EXIT_OK


def cmd_oracle(args) -> int:
    z = parse_z(args.z, args.zi)
    cfg = QuadConfig(tol=args.tol, truncation_eps=min(1e-18, args.tol * 1e-3))
    fn = oracle_G if args.variant == "sinh" else oracle_F
    spec = {"mu": args.mu, "nu": args.nu, "variant": args.variant,
            "z_re": z.real, "z_im": z.imag, "method": "oracle", "backend": BACKEND}
    try:
        res = fn(args.mu, args.nu, z, cfg)
    except ConvergenceError as exc:
        print(f"besselint: {exc}", file=sys.stderr)
        if exc.best is not None:
            _emit_value(args, exc.best.value, exc.best.est_error, {**spec, "converged": False})
        return EXIT_CONVERGENCE
    _emit_value(args, res.value, res.est_error, {**spec, "evaluations": res.evaluations})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.z_grid is None:
        zs = validation.DEFAULT_Z_GRID
    else:
        zs = [parse_z(t) for t in args.z_grid.split(",") if t.strip()]
    for z in zs:
        if not complex(z).real > 0:
            raise DomainError(f"z-grid values must have positive real part, got {z}")
    cfg = QuadConfig(tol=args.tol, truncation_eps=min(1e-18, args.tol * 1e-3))
    report = validation.verify_paper_tables().merged(
        validation.verify_grid(args.max_m, args.max_n, zs, cfg, workers=args.workers)
    )
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        sys.stdout.write(_rows_csv(
            ["check", "params", "passed", "max_residual", "expected", "actual"],
            [[e.check, json.dumps(e.params), e.passed, f"{e.max_residual:.3e}", e.expected, e.actual]
             for e in report.entries],
        ))
    else:
        shown = report.entries if args.all else report.failures()
        for e in shown:
            status = "PASS" if e.passed else "FAIL"
            print(f"{status} {e.check:<16} {json.dumps(e.params)} residual={e.max_residual:.3e}")
        print(f"{report.passed}/{report.total} checks passed, {report.failed} failed")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


_COMMANDS = {"coeffs": cmd_coeffs, "eval": cmd_eval, "oracle": cmd_oracle, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, val in _COMMON_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, val)
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, UnsupportedCaseError, _UsageError, ValueError) as exc:
        print(f"besselint: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
