"""Tests of the cross-method check suite itself.

The important property is that the suite bites: perturbing any recurrence
seed must make it fail, and fail early (at index 2 or lower), because that
is where a corrupted build would first disagree with the closed forms.
"""

import re

import pytest

from gmlucas.verify import FAULTS, CheckResult, VerifyReport, run_verify

N_CHECKS = 23


@pytest.fixture(scope="module")
def small_report() -> VerifyReport:
    return run_verify(max_n=12, max_poly_n=6, seed=7)


def test_clean_run_passes(small_report):
    assert small_report.overall
    assert len(small_report.checks) == N_CHECKS
    assert all(isinstance(c, CheckResult) for c in small_report.checks)
    assert all(c.passed and c.detail == "" for c in small_report.checks)


def test_report_is_sorted_by_name(small_report):
    names = [c.name for c in small_report.checks]
    assert names == sorted(names)
    assert len(set(names)) == N_CHECKS


def test_report_is_deterministic(small_report):
    again = run_verify(max_n=12, max_poly_n=6, seed=7)
    assert again == small_report


def test_another_seed_also_passes():
    assert run_verify(max_n=8, max_poly_n=6, seed=42).overall


@pytest.mark.parametrize("fault", FAULTS)
def test_fault_injection_bites_early(fault):
    report = run_verify(max_n=12, max_poly_n=6, inject_fault=fault)
    assert not report.overall
    failed = [c for c in report.checks if not c.passed]
    assert [c.name for c in failed] == ["route-agreement/numbers"]
    match = re.match(r"n=(\d+):", failed[0].detail)
    assert match, failed[0].detail
    assert int(match.group(1)) <= 2


def test_fault_names_are_the_three_seeds():
    assert FAULTS == ("m1", "gm0", "gm1")


def test_parameter_validation():
    with pytest.raises(ValueError):
        run_verify(max_n=3)
    with pytest.raises(ValueError):
        run_verify(max_poly_n=3)
    with pytest.raises(ValueError):
        run_verify(inject_fault="bogus")


def test_check_ranges_follow_bounds(small_report):
    by_name = {c.name: c for c in small_report.checks}
    assert by_name["route-agreement/numbers"].range == "0..12"
    assert by_name["route-agreement/polynomials"].range == "0..6"
    assert by_name["specialization/x=1"].range == "0..12"
    assert by_name["negative/backward-closure"].range == "-10..12"
    assert by_name["kernel/explicit-poly"].range == "0..60"
