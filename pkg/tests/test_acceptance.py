"""Acceptance criteria, one test each, every one printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (lines are written straight to
the terminal, so ``-s`` is not needed).
"""

import math
import time
from fractions import Fraction

import pytest

from besselint import (
    ConvergenceError,
    IntegralSpec,
    Kernel,
    Parity,
    coeff_table,
    eval_F,
    eval_G,
    k_half_poly,
    oracle_F,
    oracle_G,
    polynomial_for,
    product_identity_check,
)
from besselint.exact_coeffs import (
    Family,
    convolve_chat_p,
    convolve_cp,
    convolve_dhat_p,
    convolve_dp,
    pochhammer,
)
from besselint.oracle import QuadConfig


@pytest.fixture
def announce(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")

    return emit


def test_criterion_1_coefficient_lists(announce):
    t0 = time.perf_counter()
    got_47 = coeff_table(IntegralSpec(4, 7)).coeffs
    got_43 = coeff_table(IntegralSpec(4, 3)).coeffs
    elapsed = time.perf_counter() - t0
    exact = got_47 == tuple(Fraction(c) for c in (8, 208, 2520, 17880, 76800, 184320, 184320)) and got_43 == tuple(
        Fraction(c) for c in (8, 48, 120, 120)
    )
    integral = all(c.denominator == 1 for c in got_47 + got_43)
    ok = exact and integral and elapsed < 1.0
    announce(1, ok, f"F(4,7) and F(4,3) tables exact={exact} integer={integral} in {elapsed * 1e3:.1f} ms")
    assert ok


def test_criterion_2_normalized_displays(announce):
    displays = {
        (4, 7): (1, 26, 315, 2235, 9600, 23040, 23040),
        (4, 3): (1, 6, 15, 15),
    }
    results = {}
    for (mu, nu), poly in displays.items():
        scale, monic = polynomial_for(IntegralSpec(mu, nu)).monic()
        results[(mu, nu)] = scale == Fraction(1, 2) and monic == tuple(Fraction(c) for c in poly)
    ok = all(results.values())
    announce(2, ok, f"pi e^-z/(2z) displays reproduced exactly: {results}")
    assert ok


def test_criterion_3_leading_coefficients(announce):
    bad = []
    checked = 0
    for n in range(11):
        half = pochhammer(Fraction(1, 2), n)
        closed_even = 4**n - math.factorial(n) / (2 * half) * math.comb(2 * n, n)
        if closed_even != Fraction(2 ** (2 * n), 2):
            bad.append(("simplification", n))
        for m in range(11):
            cases = [
                (IntegralSpec.from_mn(Parity.EVEN_MU, n, m), closed_even),
                (IntegralSpec.from_mn(Parity.ODD_MU, n, m), Fraction(4**n)),
                # G(0, nu) = F(0, nu), so the vanishing applies from n = 1 on
                (IntegralSpec.from_mn(Parity.EVEN_MU, n, m, Kernel.SINH), Fraction(0) if n else closed_even),
            ]
            for spec, want in cases:
                checked += 1
                if coeff_table(spec).coeffs[0] != want:
                    bad.append((spec.mu, spec.nu, spec.variant.value))
    ok = not bad
    announce(3, ok, f"{checked} constant terms vs 2^(2n-1), 2^(2n), 0 (sinh, n>=1); mismatches={bad[:5]}")
    assert ok


def test_criterion_4_closed_form_vs_oracle(announce):
    cfg = QuadConfig(tol=1e-10)
    zs = (0.5, 1.0, 2.0, 5.0, 10.0, 2 + 1j)
    cases = [("F", mu, nu) for mu in range(10) for nu in range(10) if (mu + nu) % 2]
    cases += [("G", mu, nu) for mu in (0, 2, 4, 6, 8) for nu in (1, 3, 5, 7, 9)]
    worst, failures, count = 0.0, [], 0
    t0 = time.perf_counter()
    for kind, mu, nu in cases:
        ev, orc = (eval_F, oracle_F) if kind == "F" else (eval_G, oracle_G)
        for z in zs:
            count += 1
            closed = ev(mu, nu, z).value
            try:
                ref = orc(mu, nu, z, cfg).value
            except ConvergenceError:
                failures.append((kind, mu, nu, z, "no convergence"))
                continue
            rel = abs(closed - ref) / abs(ref)
            worst = max(worst, rel)
            if rel > 1e-8:
                failures.append((kind, mu, nu, z, rel))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300
    announce(4, ok, f"{count} comparisons, max rel diff {worst:.2e} (<= 1e-8), {elapsed:.1f} s; failures={failures[:5]}")
    assert ok


def test_criterion_5_product_identity(announce):
    halves = (0.5, 1.5, 2.5, 3.5)
    worst, bad = 0.0, []
    for a in halves:
        for b in halves:
            for x in (1.0, 2.0, 1 + 1j):
                r = product_identity_check(a, b, x)
                worst = max(worst, r)
                if r > 1e-9:
                    bad.append((a, b, x, r))
    ok = not bad
    announce(5, ok, f"{len(halves) ** 2 * 3} residuals, max {worst:.2e} (<= 1e-9)")
    assert ok


def test_criterion_6_degree_law(announce):
    # degrees exactly as stated: 2m, 2n-1, 2m, 2n
    stated = {Family.C: lambda n, m: 2 * m, Family.D: lambda n, m: 2 * n - 1,
              Family.CHAT: lambda n, m: 2 * m, Family.DHAT: lambda n, m: 2 * n}
    mismatches = {}
    sinh_bad = []
    for n in range(9):
        for m in range(9):
            for case in Parity:
                spec = IntegralSpec.from_mn(case, n, m)
                table = coeff_table(spec)
                last = max(p for p, c in enumerate(table.coeffs) if c != 0)
                want = stated[spec.family](n, m)
                if table.degree != want or last != want:
                    mismatches.setdefault(spec.family.value, []).append((spec.mu, spec.nu, last, want))
            if n >= 1 and coeff_table(IntegralSpec.from_mn(Parity.EVEN_MU, n, m, Kernel.SINH)).coeffs[0] != 0:
                sinh_bad.append((n, m))
    ok = not mismatches and not sinh_bad
    summary = {fam: len(v) for fam, v in mismatches.items()}
    example = next(iter(mismatches.values()))[0] if mismatches else None
    announce(
        6, ok,
        f"degree mismatches per family {summary} (first: mu,nu,actual,stated = {example}); "
        f"sinh constant-term failures {len(sinh_bad)}",
    )
    assert ok


def test_criterion_7_property_suite(announce):
    problems = []
    for n in range(11):
        for m in range(11):
            for k in range(n + 1):
                convs = [convolve_cp if m >= n else convolve_dp, convolve_chat_p if m > n else convolve_dhat_p]
                for conv in convs:
                    if conv(m, n, k, 0) != 1:
                        problems.append(("p0", conv.__name__, m, n, k))
            even = coeff_table(IntegralSpec.from_mn(Parity.EVEN_MU, n, m)).coeffs
            odd = coeff_table(IntegralSpec.from_mn(Parity.ODD_MU, n, m)).coeffs
            if not all(c > 0 for c in even + odd):
                problems.append(("positive", n, m))
            if not all((2 * c).denominator == 1 for c in even):
                problems.append(("2x even integer", n, m))
            if not all(c.denominator == 1 for c in odd):
                problems.append(("odd integer", n, m))
    for s in range(11):
        if k_half_poly(s).coeffs[-1] != Fraction(math.factorial(2 * s), math.factorial(s) * 2**s):
            problems.append(("half-order last", s))
    ok = not problems
    announce(7, ok, f"p=0 convolutions, positivity, integrality, half-order last terms; problems={problems[:5]}")
    assert ok
