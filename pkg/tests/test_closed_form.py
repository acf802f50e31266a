import cmath
import math
from fractions import Fraction

import pytest

from besselint import (
    ConvergenceError,
    DomainError,
    IntegralSpec,
    Kernel,
    Parity,
    UnsupportedCaseError,
    UnsupportedParityError,
    eval_F,
    eval_G,
    oracle_F,
    oracle_G,
    polynomial_for,
)
from besselint.closed_form import PolyInvZ, horner


def base(z):
    return math.pi * cmath.exp(-z) / z


def test_horner():
    assert horner([1.0, 2.0, 3.0], 0.5) == 1.0 + 1.0 + 0.75
    assert horner([], 2.0) == 0


def test_polynomial_even_mu_example():
    poly = polynomial_for(IntegralSpec.from_mn(Parity.EVEN_MU, 2, 3))
    assert poly.prefactor_pow2 == 4
    assert list(poly.coeffs) == [8, 208, 2520, 17880, 76800, 184320, 184320]
    assert poly.degree == 6


@pytest.mark.parametrize(
    "n, m, display",
    [
        (2, 3, (1, 26, 315, 2235, 9600, 23040, 23040)),
        (2, 1, (1, 6, 15, 15)),
    ],
)
def test_monic_displays(n, m, display):
    scale, coeffs = polynomial_for(IntegralSpec.from_mn(Parity.EVEN_MU, n, m)).monic()
    assert scale == Fraction(1, 2)
    assert coeffs == tuple(Fraction(c) for c in display)


def test_polynomial_odd_mu_prefactor():
    poly = polynomial_for(IntegralSpec(5, 2))
    assert poly.prefactor_pow2 == 5


def test_polyinvz_call_matches_formula():
    poly = PolyInvZ((Fraction(1), Fraction(3, 2)), 2)
    z = 1.5 + 0.5j
    assert poly(z) == pytest.approx(base(z) / 4 * (1 + 1.5 / z), rel=1e-15)


@pytest.mark.parametrize("z", [0.5, 2.0, 7.0, 2 + 1j, 1 + 3j])
def test_trivial_values(z):
    expected = base(z) / 2
    assert eval_F(0, 1, z).value == pytest.approx(expected, rel=1e-14)
    assert eval_F(1, 0, z).value == pytest.approx(expected, rel=1e-14)
    assert eval_G(0, 1, z).value == pytest.approx(expected, rel=1e-14)
    assert eval_G(2, 1, z).value == pytest.approx(base(z) / (2 * z), rel=1e-14)


def test_eval_F_4_7_at_2():
    expected = math.pi * math.exp(-2) / 4 * (1 + 13 + 78.75 + 279.375 + 600 + 720 + 360)
    assert eval_F(4, 7, 2).value == pytest.approx(expected, rel=1e-14)


def test_eval_F_0_1_at_2_numeric():
    # pi e^{-2} / 4
    assert eval_F(0, 1, 2).value.real == pytest.approx(0.10629208289690, rel=1e-12)


def test_eval_F_1_0_at_1_numeric():
    assert eval_F(1, 0, 1).value.real == pytest.approx(0.5778636748, rel=1e-9)


def test_result_fields():
    res = eval_F(4, 7, 2)
    assert res.spec == IntegralSpec(4, 7)
    assert res.z == 2
    assert isinstance(res.value, complex)


@pytest.mark.parametrize("mu, nu", [(4, 7), (3, 8), (0, 5)])
def test_negative_nu_normalized(mu, nu):
    assert eval_F(mu, -nu, 1.3).value == eval_F(mu, nu, 1.3).value


@pytest.mark.parametrize("mu, nu", [(mu, nu) for mu in range(8) for nu in range(8) if (mu + nu) % 2])
def test_positive_and_decreasing_in_real_z(mu, nu):
    zs = [0.1 * 1.3**k for k in range(25)]
    vals = [eval_F(mu, nu, z).value for z in zs]
    assert all(v.imag == 0 and v.real > 0 for v in vals)
    assert all(a.real > b.real for a, b in zip(vals, vals[1:]))


def test_sinh_decay_n1():
    # one power of 1/z factors out of G(2, nu; z)
    for nu in (1, 3, 5, 7):
        c = [eval_G(2, nu, z).value.real * z**2 * math.exp(z) for z in (50.0, 150.0, 600.0)]
        assert c[-1] > 0
        assert abs(c[-1] - c[-2]) < abs(c[-2] - c[-3])
        limit = math.pi * 2 / 4  # pi * C_1 / 2^{2n}
        assert c[-1] == pytest.approx(limit, rel=5e-2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sinh_decay_general(n):
    # the first n coefficients vanish, so z^{n+1} e^z G tends to a nonzero constant
    for nu in (1, 5, 9):
        spec = IntegralSpec(2 * n, nu, Kernel.SINH)
        poly = polynomial_for(spec)
        assert all(c == 0 for c in poly.coeffs[:n]) and poly.coeffs[n] != 0
        limit = math.pi * float(poly.coeffs[n]) / 2 ** (2 * n)
        z = 1e4
        # z^{n+1} e^z G = pi / 2^{2n} * z^n * P(1/z), computed without overflow
        got = math.pi / 2 ** (2 * n) * z**n * horner([float(c) for c in poly.coeffs], 1 / z)
        assert got == pytest.approx(limit, rel=1e-2)


def _pairs(max_order=9):
    for mu in range(max_order + 1):
        for nu in range(max_order + 1):
            if (mu + nu) % 2:
                yield "F", mu, nu
                if mu % 2 == 0:
                    yield "G", mu, nu


@pytest.mark.parametrize("z", [0.5, 1.0, 2.0, 5.0, 10.0, 2 + 1j, 1 + 3j])
def test_against_oracle(z):
    worst = 0.0
    for kind, mu, nu in _pairs():
        ev, orc = (eval_F, oracle_F) if kind == "F" else (eval_G, oracle_G)
        closed = ev(mu, nu, z).value
        try:
            ref = orc(mu, nu, z)
        except ConvergenceError as exc:
            # heavy cancellation at strongly complex z: the certified bound
            # can stall above 1e-10 while the estimate itself stays accurate
            ref = exc.best
            assert ref.est_error <= 1e-6 * abs(ref.value)
        rel = abs(closed - ref.value) / abs(ref.value)
        worst = max(worst, rel)
        assert rel <= 1e-8, (kind, mu, nu, z, rel)
    print(f"z={z}: worst relative difference {worst:.2e}")


@pytest.mark.parametrize("z", [0, -1, 1j, -2 + 1j, complex("nan")])
def test_domain_errors(z):
    with pytest.raises(DomainError):
        eval_F(0, 1, z)
    with pytest.raises(DomainError):
        eval_G(0, 1, z)


def test_parity_errors():
    with pytest.raises(UnsupportedParityError, match="unsupported parity"):
        eval_F(4, 6, 1.0)


@pytest.mark.parametrize("mu, nu", [(1, 2), (2, 2), (3, 0), (2, 4)])
def test_eval_G_unsupported(mu, nu):
    with pytest.raises(UnsupportedCaseError):
        eval_G(mu, nu, 1.0)


def test_finite_for_large_orders():
    for z in (0.05, 1.0, 30.0, 3 + 20j):
        v = eval_F(20, 31, z).value
        assert cmath.isfinite(v)
