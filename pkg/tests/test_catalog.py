from fractions import Fraction

import pytest

from hwnorm.catalog import (Family, Kind, convergence_threshold, make_fiber, parse_fiber,
                            parse_group, structure_constants)

from conftest import fiber, group


def all_specs(max_rank=4):
    specs = [group("sp", r=r) for r in range(1, max_rank + 1)]
    specs += [group("su", q=q, s=s) for q in range(1, 6) for s in range(1, 6) if min(q, s) <= max_rank]
    specs += [group("sostar", s=s) for s in range(2, 2 * max_rank + 2)]
    specs += [group("spin", n=n) for n in range(3, 12)]
    specs += [group("e6"), group("e7")]
    return specs


def test_examples():
    sp = group("sp", r=2)
    assert (sp.r, sp.n, sp.d, sp.b, sp.p, sp.tube) == (2, 3, 1, 0, 3, True)
    so = group("sostar", s=5)
    assert (so.r, so.n, so.d, so.b, so.p, so.tube) == (2, 10, 4, 2, 8, False)
    e7 = group("e7")
    assert (e7.r, e7.n, e7.d, e7.b, e7.p, e7.tube) == (3, 27, 8, 0, 18, True)
    e6 = group("e6")
    assert (e6.r, e6.n, e6.d, e6.b, e6.p) == (2, 16, 6, 4, 12)


@pytest.mark.parametrize("spec", all_specs(), ids=lambda s: s.label())
def test_structure_identities(spec):
    assert spec.n == spec.r + spec.r * (spec.r - 1) * spec.d // 2 + spec.b * spec.r
    assert spec.p == 2 + (spec.r - 1) * spec.d + spec.b
    assert spec.n_T == spec.n - spec.b * spec.r


def test_su_symmetry():
    for q in range(1, 5):
        for s in range(1, 5):
            a, b = group("su", q=q, s=s), group("su", q=s, s=q)
            assert (a.r, a.d, a.b, a.n, a.p) == (b.r, b.d, b.b, b.n, b.p)
            assert (a.su_q, a.su_s) == (q, s)


def test_thresholds():
    sp3 = group("sp", r=3)
    assert all(convergence_threshold(sp3, fiber(sp3, k)) == 3 for k in range(3))
    su = group("su", q=2, s=2)
    assert convergence_threshold(su, fiber(su, (1, 0))) == 3
    sp6 = group("spin", n=6)
    assert convergence_threshold(sp6, fiber(sp6, Fraction(1, 2))) == 5


def test_parse_group_and_fiber():
    spec = parse_group("su:q=2,s=3")
    assert spec.label() == "SU(2,3)"
    assert parse_fiber(spec, "k=2,1,0").k == (2, 1, 0)
    assert parse_fiber(spec, "").k == (0, 0, 0)
    spin = parse_group("spin:n=8")
    f = parse_fiber(spin, "k=1/2,sign=-")
    assert (f.k, f.sign) == (Fraction(1, 2), -1)
    so = parse_group("sostar:s=5")
    assert parse_fiber(so, "k=2,kind=det").kind is Kind.SYM_DET
    assert parse_fiber(so, "k=0,kind=det").kind is Kind.SYM_DUAL
    assert parse_group("e7").family is Family.E7


@pytest.mark.parametrize("text", ["xx:r=1", "sp:q=1", "sp:r=0", "su:q=2", "spin:n=2", "sp"])
def test_parse_group_errors(text):
    with pytest.raises(ValueError):
        parse_group(text)


def test_fiber_validation():
    with pytest.raises(ValueError):
        make_fiber(group("sp", r=2), 2)
    with pytest.raises(ValueError):
        make_fiber(group("su", q=2, s=2), (0, 1))
    with pytest.raises(ValueError):
        make_fiber(group("spin", n=7), 1)
    with pytest.raises(ValueError):
        make_fiber(group("e7"), 1)
    with pytest.raises(ValueError):
        parse_fiber(group("sp", r=2), "k=1,foo=2")


def test_fiber_accessors():
    su = group("su", q=1, s=3)
    f = fiber(su, (1, 1, 0))
    assert f.total == 2 and f.nonzero_count == 2 and not f.scalar
    assert fiber(group("sp", r=2)).scalar
