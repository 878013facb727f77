"""Signatures, partitions and the branching rules behind the decompositions.

Signatures are tuples of Fractions so that half-integral weights (spin and
determinant twists) need no special casing.  All functions are pure.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import product
from math import prod


def sig(entries) -> tuple:
    """Normalize an iterable of numbers into a signature tuple of Fractions."""
    return tuple(Fraction(x) for x in entries)


def is_dominant(m) -> bool:
    return all(m[i] >= m[i + 1] for i in range(len(m) - 1))


def iter_partitions(r: int, N: int) -> list:
    """All m with r weakly decreasing nonnegative parts summing to N.

    Listed in decreasing lexicographic order, e.g. (2,0) before (1,1).
    """
    if r < 1 or N < 0:
        raise ValueError("need r >= 1 and N >= 0")
    out = []

    def rec(prefix, remaining, cap):
        if len(prefix) == r - 1:
            if remaining <= cap:
                out.append(tuple(prefix) + (remaining,))
            return
        for part in range(min(cap, remaining), -1, -1):
            # the remaining slots cannot hold more than part each
            if part * (r - len(prefix)) < remaining:
                break
            rec(prefix + [part], remaining - part, part)

    rec([], N, N)
    return out


def iter_compositions(k: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to k, lexicographically descending."""
    if parts == 0:
        if k == 0:
            yield ()
        return
    if parts == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in iter_compositions(k - first, parts - 1):
            yield (first,) + rest


def pieri_wedge(m, k: int) -> list:
    """All m + kappa with kappa in {0,1}^r, |kappa| = k, result weakly decreasing."""
    r = len(m)
    if not 0 <= k <= r:
        raise ValueError("need 0 <= k <= r")
    out = set()
    for kappa in product((1, 0), repeat=r):
        if sum(kappa) != k:
            continue
        cand = tuple(a + b for a, b in zip(m, kappa))
        if is_dominant(cand):
            out.add(cand)
    return sorted(out, reverse=True)


def pieri_sym(m, k: int) -> list:
    """All (m + kappa, kappa) with |kappa| = k and kappa_j <= m_{j-1} - m_j for j >= 2.

    The first row is unconstrained.
    """
    if k < 0:
        raise ValueError("need k >= 0")
    r = len(m)
    out = []
    for kappa in iter_compositions(k, r):
        if all(kappa[j] <= m[j - 1] - m[j] for j in range(1, r)):
            out.append((tuple(a + b for a, b in zip(m, kappa)), kappa))
    out.sort(reverse=True)
    return out


def _trim(p) -> tuple:
    p = [int(x) for x in p]
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def lr_coefficient(outer, inner, weight) -> int:
    """Littlewood-Richardson coefficient c^outer_{inner, weight}.

    Counts semistandard fillings of the skew shape outer/inner with content
    `weight` whose reverse reading word (right to left, top to bottom) is a
    lattice word.
    """
    outer, inner, weight = _trim(outer), _trim(inner), _trim(weight)
    if sum(outer) != sum(inner) + sum(weight):
        return 0
    if len(inner) > len(outer) or any(inner[i] > outer[i] for i in range(len(inner))):
        return 0
    inner = inner + (0,) * (len(outer) - len(inner))
    cells = [(row, col) for row in range(len(outer))
             for col in range(outer[row] - 1, inner[row] - 1, -1)]
    # cells are in reverse reading order: rows top to bottom, right to left
    fill = {}
    counts = [0] * (len(weight) + 1)

    def rec(idx):
        if idx == len(cells):
            return 1
        row, col = cells[idx]
        total = 0
        for label in range(1, len(weight) + 1):
            if counts[label] >= weight[label - 1]:
                continue
            if label > 1 and counts[label] >= counts[label - 1]:
                continue  # lattice word condition
            right = fill.get((row, col + 1))
            if right is not None and label > right:
                continue  # rows weakly increase left to right
            above = fill.get((row - 1, col))
            if above is not None and label <= above:
                continue  # columns strictly increase downward
            fill[(row, col)] = label
            counts[label] += 1
            total += rec(idx + 1)
            counts[label] -= 1
            del fill[(row, col)]
        return total

    return rec(0)


def gl_branch(m, s: int) -> list:
    """Signatures n of gl(s-1) interlacing m: m_j >= n_j >= m_{j+1}."""
    if len(m) != s or s < 2:
        raise ValueError("m must have s >= 2 entries")
    ranges = [range(int(m[j]), int(m[j + 1]) - 1, -1) for j in range(s - 1)]
    return [tuple(n) for n in product(*ranges)]


def so_tensor_minuscule(m: int, k, sign: int, n: int) -> list:
    """Constituents of V_(m,0,..,0) tensor V_(k,..,k,+-k) for so(n).

    For odd n only k in {0, 1/2} is allowed, and the last entry is |l|.
    """
    k = Fraction(k)
    if n < 4:
        raise ValueError("need n >= 4")
    s = n // 2
    if n % 2:
        if k not in (0, Fraction(1, 2)):
            raise ValueError("odd n allows only k in {0, 1/2}")
        if k == 0:
            return [sig((m,) + (0,) * (s - 1))]
        half = Fraction(1, 2)
        out = [sig((m + half,) + (half,) * (s - 1))]
        if m > 0:
            out.append(sig((m - half,) + (half,) * (s - 1)))
        return out
    if (2 * k).denominator != 1 or k < 0:
        raise ValueError("k must be a nonnegative half-integer")
    out = []
    l = max(-k, k - m)
    while l <= k:
        out.append(sig((m + l,) + (k,) * (s - 2) + (sign * l,)))
        l += 1
    return out


def _poly_mul(p: dict, q: dict) -> dict:
    out = defaultdict(int)
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] += x * y
    return {e: c for e, c in out.items() if c}


def so_branch_coeff(upper, lower, n0) -> int:
    """Multiplicity of C_{n0} x V_lower in V_upper restricted from so(2s+2) to so(2)+so(2s).

    Coefficient of X^{n0} in X^{a_s} prod_{j<s} (X^{a_j+1} - X^{-a_j-1})/(X - X^{-1}).
    """
    m, nn = sig(upper), sig(lower)
    s = len(nn)
    if len(m) != s + 1:
        raise ValueError("upper must have one more entry than lower")
    # interlacing m_{i-1} >= n_i >= |m_{i+1}| and m_{s-1} >= |n_s|
    for i in range(1, s):
        if not m[i - 1] >= nn[i - 1] >= abs(m[i + 1]):
            return 0
    if not m[s - 1] >= abs(nn[s - 1]):
        return 0
    a = [m[0] - max(m[1], nn[0])]
    for j in range(1, s):
        a.append(min(m[j], nn[j - 1]) - max(abs(m[j + 1]), abs(nn[j])))
    sgn = lambda x: (x > 0) - (x < 0)
    a_s = sgn(m[s]) * sgn(nn[s - 1]) * min(abs(m[s]), abs(nn[s - 1]))
    poly = {Fraction(a_s): 1}
    for aj in a:
        if aj < 0:
            return 0
        # (X^{a+1} - X^{-a-1})/(X - X^{-1}) = X^a + X^{a-2} + ... + X^{-a}
        factor, e = {}, aj
        while e >= -aj:
            factor[e] = 1
            e -= 2
        poly = _poly_mul(poly, factor)
    return poly.get(Fraction(n0), 0)


def weyl_dim_gl(m, s: int) -> int:
    """Weyl dimension of the gl(s) module with highest weight m (shift-invariant)."""
    m = sig(m)
    if len(m) != s:
        raise ValueError("signature length must equal s")
    value = Fraction(1)
    for i in range(s):
        for j in range(i + 1, s):
            value *= Fraction(m[i] - m[j] + j - i, j - i)
    if value.denominator != 1:
        raise ValueError(f"{m} is not a gl({s}) highest weight")
    return int(value)


def weyl_dim_so(m, n: int) -> int:
    """Weyl dimension of the so(n) module with highest weight m (floor(n/2) entries)."""
    m = sig(m)
    s = n // 2
    if len(m) != s:
        raise ValueError(f"so({n}) weights have {s} entries")
    if n == 2:
        return 1
    if n % 2:
        rho = [Fraction(2 * (s - i) - 1, 2) for i in range(s)]
    else:
        rho = [Fraction(s - 1 - i) for i in range(s)]
    lam = [a + b for a, b in zip(m, rho)]
    value = Fraction(1)
    for i in range(s):
        for j in range(i + 1, s):
            value *= Fraction(lam[i] ** 2 - lam[j] ** 2, rho[i] ** 2 - rho[j] ** 2)
    if n % 2:
        value *= prod(Fraction(x, y) for x, y in zip(lam, rho))
    if value.denominator != 1 or value <= 0:
        raise ValueError(f"{m} is not a dominant so({n}) weight")
    return int(value)
