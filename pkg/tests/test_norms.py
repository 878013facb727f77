import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hwnorm.arith import FactoredFn
from hwnorm.decomp import decompose, decompose_upto
from hwnorm.norms import (ConjecturalContentError, gamma_omega_log, gen_poch, kernel_coeff,
                          norm_ratio, normalizing_const)
from hwnorm.oracle import acceptance_configs, two_form_check

from conftest import fiber, group

F = Fraction
P = FactoredFn.poch
L = FactoredFn.linear
CONFIGS = acceptance_configs()
IDS = [f"{s.label()}-k{f.k}-{f.kind.value}-{f.sign}" for s, f in CONFIGS]


def find(spec, fib, **index):
    degree = sum(index["m"]) if "m" in index else sum(index["n"]) - sum(fib.k)
    for t in decompose(spec, fib, degree):
        if all(getattr(t, key) == value for key, value in index.items()):
            return t
    raise LookupError(index)


def test_gen_poch_examples():
    assert gen_poch(group("sp", r=2), (2, 1)) == L(0) * L(1) * L(F(-1, 2))
    assert gen_poch(group("e7"), (0, 0, 0)) == FactoredFn.one()
    assert gen_poch(group("e7"), (1, 1, 1)) == L(0) * L(-4) * L(-8)


def test_sp_ratio_example():
    spec = group("sp", r=2)
    fib = fiber(spec, 1)
    t = find(spec, fib, m=(1, 0), kappa=(1, 0))
    assert norm_ratio(spec, fib, t).ratio == L(1).reciprocal()


def test_su11_ratio_and_kernel():
    spec = group("su", q=1, s=1)
    fib = fiber(spec)
    for m in range(7):
        t = find(spec, fib, n=(m,))
        assert norm_ratio(spec, fib, t).ratio == P(0, m).reciprocal()
        assert kernel_coeff(spec, fib, t) == P(0, m)


def test_sp2_kernel_example():
    spec = group("sp", r=2)
    fib = fiber(spec)
    t = find(spec, fib, m=(1, 1))
    assert kernel_coeff(spec, fib, t) == L(0) * L(F(-1, 2))


@pytest.mark.parametrize("spec,fib", CONFIGS, ids=IDS)
def test_two_forms_agree(spec, fib):
    assert two_form_check(spec, fib, 6, conjecture=True).passed


@pytest.mark.parametrize("spec,fib", CONFIGS, ids=IDS)
def test_minimal_ktype_ratio_is_one(spec, fib):
    (t,) = decompose(spec, fib, 0)
    assert norm_ratio(spec, fib, t).ratio == FactoredFn.one()


@pytest.mark.parametrize("spec", [group("sp", r=3), group("su", q=3, s=2), group("su", q=2, s=2),
                                  group("sostar", s=4), group("sostar", s=5), group("spin", n=6),
                                  group("spin", n=7), group("e6"), group("e7")],
                         ids=lambda s: s.label())
def test_scalar_fiber_collapse(spec):
    fib = fiber(spec)
    for t in decompose_upto(spec, fib, 5):
        assert norm_ratio(spec, fib, t).ratio == gen_poch(spec, t.m).reciprocal()


def test_kernel_gains_one_factor_per_degree():
    spec = group("sostar", s=5)
    fib = fiber(spec, 1, "det")
    for t in decompose_upto(spec, fib, 4):
        bigger = find(spec, fib, m=(t.m[0] + 1,) + t.m[1:], kappa=t.kappa)
        assert kernel_coeff(spec, fib, bigger).degree() == kernel_coeff(spec, fib, t).degree() + 1


def test_e6_skeleton_needs_flag():
    spec = group("e6")
    fib = fiber(spec, 1)
    t = find(spec, fib, m=(1, 0), kappa=(1, 0, 0, 0))
    result = norm_ratio(spec, fib, t)
    assert result.unknown_numerator_degree == 2 and not result.conjectural
    with pytest.raises(ConjecturalContentError):
        kernel_coeff(spec, fib, t)
    conj = norm_ratio(spec, fib, t, conjecture=True)
    assert conj.conjectural and conj.unknown_numerator_degree == 0


def test_e6_known_ktypes_are_not_conjectural():
    spec = group("e6")
    fib = fiber(spec, 1)
    t = find(spec, fib, m=(1, 1), kappa=(0, 0, 0, 1))
    result = norm_ratio(spec, fib, t)
    assert not result.conjectural and result.unknown_numerator_degree == 0


def test_normalizing_const_examples():
    su21 = group("su", q=2, s=1)
    assert normalizing_const(su21, fiber(su21)) == P(-2, 2)
    e6 = group("e6")
    assert normalizing_const(e6, fiber(e6)) == P(-7, 7) * L(-8) * P(-11, 7) * L(-4)
    sp1 = group("sp", r=1)
    assert normalizing_const(sp1, fiber(sp1)) == L(-1)


def test_normalizing_const_isomorphisms():
    half = F(1, 2)
    sp2, spin3 = group("sp", r=2), group("spin", n=3)
    assert normalizing_const(sp2, fiber(sp2, 1)) == normalizing_const(spin3, fiber(spin3, half))
    so8, spin6 = group("sostar", s=4), group("spin", n=6)
    assert normalizing_const(so8, fiber(so8, 2)) == normalizing_const(spin6, fiber(spin6, 1))


@pytest.mark.parametrize("spec,fib", CONFIGS, ids=IDS)
def test_normalizing_const_is_polynomial(spec, fib):
    const = normalizing_const(spec, fib)
    assert const.den == () and const.constant == 1


def test_gamma_omega_examples():
    sp1 = group("sp", r=1)
    assert gamma_omega_log(sp1, [F(7, 2)]) == pytest.approx(math.lgamma(3.5))
    sp2 = group("sp", r=2)
    expected = 0.5 * math.log(2 * math.pi) + math.lgamma(3) + math.lgamma(2.5)
    assert gamma_omega_log(sp2, [3, 3]) == pytest.approx(expected, rel=1e-12)
    with pytest.raises(ValueError):
        gamma_omega_log(sp2, [1, F(1, 2)])


@settings(max_examples=50, deadline=None)
@given(st.integers(6, 30), st.integers(0, 4), st.integers(0, 4))
def test_gamma_poch_identity(lam, a, b):
    spec = group("sp", r=2)
    m = (max(a, b), min(a, b))
    lhs = math.exp(gamma_omega_log(spec, [lam + m[0], lam + m[1]]) - gamma_omega_log(spec, [lam, lam]))
    assert lhs == pytest.approx(float(gen_poch(spec, m).evaluate(lam)), rel=1e-9)
