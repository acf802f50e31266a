import json
import math

import pytest

from besselint import validation
from besselint.oracle import QuadConfig
from besselint.validation import VerifyReport, verify_grid, verify_paper_tables


def test_published_tables_pass():
    report = verify_paper_tables()
    assert report.ok
    assert report.total == 4
    checks = {(e.check, e.params["nu"]) for e in report.entries}
    assert checks == {("published_table", 7), ("published_table", 3), ("published_display", 7), ("published_display", 3)}


def test_corrupted_table_fails():
    tables = dict(validation.PUBLISHED_TABLES)
    tables[(4, 7)] = (8, 208, 2520, 17880, 76800, 184320, 184321)
    report = verify_paper_tables(tables=tables)
    assert not report.ok
    (bad,) = report.failures()
    assert bad.check == "published_table" and bad.params["nu"] == 7
    assert bad.max_residual == 1.0


def test_wrong_length_table_fails():
    report = verify_paper_tables(tables={(4, 3): (8, 48, 120)}, displays={})
    assert not report.ok
    assert math.isinf(report.entries[0].max_residual)


def test_corrupted_display_fails():
    displays = {(4, 3): (0.25, (1, 6, 15, 15))}
    assert not verify_paper_tables(tables={}, displays=displays).ok


@pytest.fixture(scope="module")
def small_report():
    return verify_grid(2, 2, (0.5, 2.0, 2 + 1j), QuadConfig())


def test_small_grid_passes(small_report):
    assert small_report.ok, [e for e in small_report.failures()]
    kinds = {e.check for e in small_report.entries}
    assert kinds == {"degree", "leading_coeff", "sinh_constant", "oracle", "product_identity"}


def test_grid_counts(small_report):
    # 3 specs per (n, m): cosh even, cosh odd, sinh
    specs = 3 * 3 * 3
    oracle = [e for e in small_report.entries if e.check == "oracle"]
    assert len(oracle) == specs * 3
    assert len([e for e in small_report.entries if e.check == "degree"]) == specs
    n_half = len(validation.HALF_INTEGERS)
    assert len([e for e in small_report.entries if e.check == "product_identity"]) == n_half**2 * 2
    assert small_report.total == small_report.passed + small_report.failed


def test_residuals_small_and_finite(small_report):
    for e in small_report.entries:
        assert math.isfinite(e.max_residual)
        if e.check == "oracle":
            assert e.max_residual <= validation.ORACLE_RTOL


def test_report_reproducible(small_report):
    again = verify_grid(2, 2, (0.5, 2.0, 2 + 1j), QuadConfig(), workers=1)
    assert again.to_json() == small_report.to_json()


def test_json_round_trip(small_report):
    text = small_report.to_json()
    data = json.loads(text)
    assert data["summary"] == {"total": small_report.total, "passed": small_report.passed, "failed": 0}
    back = VerifyReport.from_json(text)
    assert back.to_json() == text


def test_oracle_non_convergence_is_failure():
    # max_depth 1 cannot reach 1e-13, which the report must record as a failure
    cfg = QuadConfig(tol=1e-13, max_depth=1, truncation_eps=1e-20)
    report = verify_grid(0, 1, (2.0,), cfg, product_x=())
    oracle = [e for e in report.entries if e.check == "oracle"]
    assert oracle and not all(e.passed for e in oracle)


def test_merged_sorts():
    a = verify_paper_tables()
    b = verify_grid(0, 0, (1.0,), product_x=())
    merged = b.merged(a)
    assert merged.entries[0].check == "published_table"
    assert merged.total == a.total + b.total
