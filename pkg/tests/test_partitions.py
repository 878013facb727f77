from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hwnorm.partitions import (gl_branch, iter_compositions, iter_partitions, lr_coefficient,
                               pieri_sym, pieri_wedge, so_branch_coeff, so_tensor_minuscule, sig,
                               weyl_dim_gl, weyl_dim_so)

F = Fraction
H = F(1, 2)


def partitions_up_to(r, size):
    return [m for N in range(size + 1) for m in iter_partitions(r, N)]


def test_iter_partitions_examples():
    assert iter_partitions(2, 2) == [(2, 0), (1, 1)]
    assert iter_partitions(1, 5) == [(5,)]
    assert iter_partitions(3, 3) == [(3, 0, 0), (2, 1, 0), (1, 1, 1)]


def test_iter_compositions_count():
    assert len(list(iter_compositions(3, 3))) == comb(5, 2)


def test_pieri_wedge_examples():
    assert pieri_wedge((2, 0), 1) == [(3, 0), (2, 1)]
    assert pieri_wedge((1, 1), 1) == [(2, 1)]
    assert pieri_wedge((4, 2, 1), 0) == [(4, 2, 1)]


def test_pieri_sym_examples():
    assert pieri_sym((1, 0), 2) == [((3, 0), (2, 0)), ((2, 1), (1, 1))]
    assert pieri_sym((0, 0), 3) == [((3, 0), (3, 0))]
    assert pieri_sym((2, 1), 0) == [((2, 1), (0, 0))]


def test_lr_examples():
    assert lr_coefficient((2, 1), (1, 0), (1, 1)) == 1
    assert lr_coefficient((3, 1), (3, 1), (0,)) == 1
    assert lr_coefficient((3, 1), (1,), (1,)) == 0
    assert lr_coefficient((2, 0, 0), (1, 0, 0), (1, 0, 0)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


def test_gl_branch_examples():
    assert sorted(gl_branch((2, 0), 2), reverse=True) == [(2,), (1,), (0,)]
    assert gl_branch((1, 1), 2) == [(1,)]
    assert sorted(gl_branch((3, 1, 0), 3), reverse=True) == [(3, 1), (3, 0), (2, 1), (2, 0), (1, 1), (1, 0)]


def test_so_tensor_examples():
    assert so_tensor_minuscule(2, 1, 1, 8) == [sig((1, 1, 1, -1)), sig((2, 1, 1, 0)), sig((3, 1, 1, 1))]
    assert sorted(so_tensor_minuscule(2, H, 1, 7), reverse=True) == [sig((5 * H, H, H)), sig((3 * H, H, H))]
    assert so_tensor_minuscule(3, 0, 1, 10) == [sig((3, 0, 0, 0, 0))]


def test_so_branch_examples():
    assert so_branch_coeff((1, 0, 0, 0, 0), (1, 0, 0, 0), 0) == 1
    for k in range(4):
        for l1 in range(k + 1):
            for n0 in range(-4, 5):
                expected = int(abs(n0) <= k - l1 and (k - n0 - l1) % 2 == 0)
                assert so_branch_coeff((k, 0, 0), (l1, 0), n0) == expected


def test_weyl_dim_examples():
    assert weyl_dim_gl((2, 0, 0, 0, 0), 5) == 15
    assert weyl_dim_gl((0, 0, 0), 3) == 1
    assert weyl_dim_gl((1, 1, 0), 3) == 3
    assert weyl_dim_so((1, 0, 0, 0, 0), 10) == 10
    for k in range(5):
        assert weyl_dim_so((k, 0, 0, 0, 0), 10) == comb(k + 9, 9) - comb(k + 7, 9)
    assert weyl_dim_so((1, 1, 1, 1), 8) == 35
    assert weyl_dim_so((0, 0, 0), 7) == 1
    assert weyl_dim_so((H, H, H), 7) == 8


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dim_so((0, 1, 0), 7)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_pieri_dimension_sums(r):
    for m in partitions_up_to(r, 5):
        base = weyl_dim_gl(m, r)
        for k in range(r + 1):
            assert sum(weyl_dim_gl(x, r) for x in pieri_wedge(m, k)) == base * comb(r, k)
        for k in range(4):
            total = sum(weyl_dim_gl(x, r) for x, _ in pieri_sym(m, k))
            assert total == base * comb(r + k - 1, k)


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_gl_branch_dimension_sum(s):
    for m in partitions_up_to(s, 5):
        assert sum(weyl_dim_gl(n, s - 1) for n in gl_branch(m, s)) == weyl_dim_gl(m, s)


partition_st = st.integers(0, 6).flatmap(lambda N: st.sampled_from(iter_partitions(3, N)))


@settings(max_examples=60, deadline=None)
@given(partition_st, partition_st)
def test_lr_symmetry(mu, nu):
    size = sum(mu) + sum(nu)
    if size > 6:
        return
    for lam in iter_partitions(3, size):
        assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)


@settings(max_examples=40, deadline=None)
@given(partition_st, partition_st)
def test_lr_dimension_sum(mu, nu):
    """sum_lambda c * dim V_lambda = dim V_mu * dim V_nu for gl(3)."""
    size = sum(mu) + sum(nu)
    total = sum(lr_coefficient(lam, mu, nu) * weyl_dim_gl(lam, 3) for lam in iter_partitions(3, size))
    assert total == weyl_dim_gl(mu, 3) * weyl_dim_gl(nu, 3)


def _so_weights(s, size):
    """Dominant so(2s+2) weights with integer entries, last entry of either sign."""
    out = []
    for m in partitions_up_to(s + 1, size):
        out.append(m)
        if m[-1]:
            out.append(m[:-1] + (-m[-1],))
    return out


@pytest.mark.parametrize("s", [2, 3, 4])
def test_so_branch_dimension_sum(s):
    lowers = _so_weights(s - 1, 4)
    for upper in _so_weights(s, 4):
        total = 0
        for lower in lowers:
            for n0 in range(-8, 9):
                c = so_branch_coeff(upper, lower, n0)
                total += c * weyl_dim_so(lower, 2 * s)
        assert total == weyl_dim_so(upper, 2 * s + 2)


@pytest.mark.parametrize("n", [7, 8, 10])
def test_so_tensor_dimension_sum(n):
    s = n // 2
    ks = [0, H] if n % 2 else [0, H, 1, 3 * H]
    for k in ks:
        for sign in (1, -1):
            last = k if n % 2 else sign * k
            dim_v = weyl_dim_so((k,) * (s - 1) + (last,), n)
            for m in range(5):
                total = sum(weyl_dim_so(w, n) for w in so_tensor_minuscule(m, k, sign, n))
                assert total == weyl_dim_so((m,) + (0,) * (s - 1), n) * dim_v
