from fractions import Fraction

import pytest

from hwnorm.catalog import Kind
from hwnorm.oracle import (CheckReport, cnorm_gamma_check, e6_double_sum, e6_recurrence_check,
                           embedding_check, gamma_poch_numeric_check, graded_dim_check,
                           isomorphism_check, run_suite, sostar_odd_cnorm_check, su11_integral_check)

from conftest import fiber, group

F = Fraction


def rising(x, n):
    out = F(1)
    for i in range(n):
        out *= x + i
    return out


def test_report_passed_iff_no_witnesses():
    report = CheckReport("x")
    assert report.passed
    report.witnesses.append("boom")
    assert not report.passed and report.to_json()["passed"] is False


def test_graded_dim_examples():
    sp2 = group("sp", r=2)
    assert graded_dim_check(sp2, fiber(sp2, 1), 4).passed
    e6 = group("e6")
    assert graded_dim_check(e6, fiber(e6), 3).passed
    assert graded_dim_check(sp2, fiber(sp2), 0).passed


def test_e6_single_term_value():
    expected = 1 / (rising(F(6), 7) * 5 * rising(F(2), 7) * 9)
    assert e6_double_sum(13, 0) == expected


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_e6_recurrence(k):
    assert e6_recurrence_check(k, [13, F(27, 2), 15]).passed


def test_e6_recurrence_rejects_pole_samples():
    with pytest.raises(ValueError):
        e6_recurrence_check(1, [10])


@pytest.mark.parametrize("lam", [3, 4])
def test_su11_integral(lam):
    assert su11_integral_check(lam, 5, 1e-6).passed


def test_su11_integral_domain():
    with pytest.raises(ValueError):
        su11_integral_check(1)


@pytest.mark.parametrize("r,k,N", [(1, 1, 3), (2, 0, 4), (2, 2, 4), (1, 2, 4)])
def test_embedding(r, k, N):
    assert embedding_check(r, k, N).passed


def test_gamma_examples():
    assert gamma_poch_numeric_check(group("sp", r=2), 5, (2, 1), 1e-9).passed
    assert gamma_poch_numeric_check(group("sp", r=2), 5, (0, 0), 1e-9).passed
    assert gamma_poch_numeric_check(group("e7"), 20, (1, 1, 1), 1e-9).passed


def test_cnorm_checks():
    assert isomorphism_check().passed
    so8 = group("sostar", s=4)
    assert cnorm_gamma_check(so8, fiber(so8, 2, "det"), 25).passed
    for kind in (Kind.SYM_DUAL, Kind.SYM_DET):
        assert sostar_odd_cnorm_check(2, 2, kind, [20, F(41, 2)]).passed


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_all_suites_pass():
    reports = run_suite("all")
    assert reports and all(r.passed for r in reports), [r.name for r in reports if not r.passed]
