"""K-type decomposition of P(p+) tensor V, graded by polynomial degree.

Each family has its own enumeration following the index constraints of its
branching rule.  A KType records the highest-weight signature, the index
data (m, kappa, l, and n for SU) and its dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .arith import fmt_rat, rising
from .catalog import Family, FiberSpec, GroupSpec, Kind
from .partitions import (iter_compositions, iter_partitions, lr_coefficient, sig,
                         weyl_dim_gl, weyl_dim_so)


@dataclass(frozen=True)
class KType:
    family: Family
    degree: int
    signature: tuple  # tuple of blocks, each a tuple of Fractions
    m: tuple
    kappa: tuple = ()
    l: Fraction = None
    n: tuple = None  # SU only: the gl(s) signature
    multiplicity: int = 1
    dim: int = field(default=1, compare=False)

    def to_json(self) -> dict:
        index = {"m": list(self.m)}
        if self.kappa:
            index["kappa"] = list(self.kappa)
        if self.l is not None:
            index["l"] = fmt_rat(self.l)
        if self.n is not None:
            index["n"] = list(self.n)
        return {
            "family": self.family.value,
            "degree": self.degree,
            "signature": [[fmt_rat(x) for x in block] for block in self.signature],
            "index": index,
            "multiplicity": self.multiplicity,
            "dim": self.dim,
        }

    @classmethod
    def from_json(cls, data: dict) -> "KType":
        index = data["index"]
        return cls(
            family=Family(data["family"]),
            degree=data["degree"],
            signature=tuple(tuple(Fraction(x) for x in block) for block in data["signature"]),
            m=tuple(index["m"]),
            kappa=tuple(index.get("kappa", ())),
            l=Fraction(index["l"]) if "l" in index else None,
            n=tuple(index["n"]) if "n" in index else None,
            multiplicity=data["multiplicity"],
            dim=data["dim"],
        )


def hks_dim(spec: GroupSpec, m) -> int:
    """dim P_m(p+) from the structure constants (r, d, b).

    Product formula over restricted roots: for i < j the factors
    (m_i - m_j + (j-i)d/2) / ((j-i)d/2) and the rising factorial ratio of
    length d - 1, and for each j a rising factorial ratio of length b.
    """
    d2 = Fraction(spec.d, 2)
    r = spec.r
    value = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            gap, diff = j - i, m[i] - m[j]
            value *= (diff + gap * d2) / (gap * d2)
            base = d2 * (gap - 1) + 1
            value *= rising(diff + base, spec.d - 1) / rising(base, spec.d - 1)
    for j in range(r):
        base = d2 * (r - 1 - j) + 1
        value *= rising(m[j] + base, spec.b) / rising(base, spec.b)
    assert value.denominator == 1
    return int(value)


def fiber_dim(spec: GroupSpec, fiber: FiberSpec) -> int:
    f, k = spec.family, fiber.k
    if f is Family.SP:
        return comb(spec.r, k)
    if f is Family.SU:
        return weyl_dim_gl(k, spec.su_s)
    if f is Family.SOSTAR:
        return comb(spec.s + k - 1, k)
    if f is Family.SPIN:
        s = spec.dim // 2
        if spec.dim % 2:
            return weyl_dim_so((k,) * s, spec.dim)
        return weyl_dim_so((k,) * (s - 1) + (fiber.sign * k,), spec.dim)
    if f is Family.E6:
        return weyl_dim_so((k, 0, 0, 0, 0), 10)
    return 1


# ------------------------------------------------------------ per family

def _sp(spec, fiber, m):
    r, k = spec.r, fiber.k
    for kappa in iter_compositions(k, r):
        if max(kappa, default=0) > 1:
            continue
        top = tuple(a + b for a, b in zip(m, kappa))
        if any(top[i] < top[i + 1] for i in range(r - 1)):
            continue
        signature = tuple(2 * a + b for a, b in zip(m, kappa))
        yield KType(Family.SP, sum(m), (sig(signature),), m, kappa,
                    dim=weyl_dim_gl(signature, r))


def _su(spec, fiber, m):
    q, s, k = spec.su_q, spec.su_s, fiber.k
    size = sum(m) + sum(k)
    m_q = tuple(m) + (0,) * (q - len(m))
    dim_m = weyl_dim_gl(m_q, q)
    for n in iter_partitions(s, size):
        c = lr_coefficient(n, k, m)
        if c:
            yield KType(Family.SU, sum(m), (sig(m_q), sig(n)), m, n=n, multiplicity=c,
                        dim=dim_m * weyl_dim_gl(n, s))


def _sostar(spec, fiber, m):
    r, k, s = spec.r, fiber.k, spec.s
    odd = spec.odd_sostar
    parts = r + 1 if odd else r
    for kappa in iter_compositions(k, parts):
        if fiber.kind is Kind.SYM_DUAL:
            # 0 <= kappa_j <= m_{j-1} - m_j for j >= 2; kappa_{r+1} <= m_r
            mm = tuple(m) + (0,)
            if any(kappa[j] > mm[j - 1] - mm[j] for j in range(1, parts)):
                continue
            weight = []
            for j in range(r):
                weight += [m[j] + kappa[j], m[j]]
            if odd:
                weight.append(kappa[r])
            signature = sig(weight)
        else:
            # 0 <= kappa_j <= m_j - m_{j+1} for j < r; for SO*(4r+2) also kappa_r <= m_r
            mm = tuple(m) + (0,)
            bounded = r if odd else r - 1
            if any(kappa[j] > mm[j] - mm[j + 1] for j in range(bounded)):
                continue
            weight = []
            for j in range(r):
                weight += [m[j], m[j] - kappa[j]]
            if odd:
                weight.append(-kappa[r])
            signature = tuple(Fraction(x) + Fraction(k, 2) for x in weight)
        yield KType(Family.SOSTAR, sum(m), (signature,), m, kappa,
                    dim=weyl_dim_gl(signature, s))


def _spin(spec, fiber, m):
    n, k = spec.dim, fiber.k
    s = n // 2
    m1, m2 = m
    l = -k
    while l <= k:
        if m1 - m2 + l >= k:
            last = abs(l) if n % 2 else fiber.sign * l
            weight = sig((m1 - m2 + l,) + (k,) * (s - 2) + (last,))
            m0 = -(m1 + m2 + k)
            yield KType(Family.SPIN, sum(m), ((Fraction(m0),), weight), m, l=l,
                        dim=weyl_dim_so(weight, n))
        l += 1


def _e6(spec, fiber, m):
    k = fiber.k
    m1, m2 = m
    half = Fraction(1, 2)
    for kappa in iter_compositions(k, 4):
        k1, k2, k3, k4 = kappa
        if k2 + k4 > m2 or k3 > m1 - m2:
            continue
        a = (m1 - m2) * half
        weight = ((m1 + m2) * half + k1 - k4, a + k2, a, a, -a + k3)
        m0 = Fraction(-3, 4) * (m1 + m2) - Fraction(k, 2)
        yield KType(Family.E6, sum(m), ((m0,), sig(weight)), m, kappa,
                    dim=weyl_dim_so(weight, 10))


def _e7(spec, fiber, m):
    yield KType(Family.E7, sum(m), (sig(m),), m, dim=hks_dim(spec, m))


_ENUMERATORS = {Family.SP: _sp, Family.SU: _su, Family.SOSTAR: _sostar,
                Family.SPIN: _spin, Family.E6: _e6, Family.E7: _e7}


@lru_cache(maxsize=None)
def decompose(spec: GroupSpec, fiber: FiberSpec, N: int) -> tuple:
    """All K-types of polynomial degree exactly N, in a fixed order."""
    if N < 0:
        raise ValueError("degree must be nonnegative")
    if fiber.family is not spec.family:
        raise ValueError("fiber does not belong to this group")
    enum = _ENUMERATORS[spec.family]
    out = []
    for m in iter_partitions(spec.r, N):
        out.extend(enum(spec, fiber, m))
    return tuple(out)


def decompose_upto(spec: GroupSpec, fiber: FiberSpec, N: int) -> tuple:
    out = []
    for degree in range(N + 1):
        out.extend(decompose(spec, fiber, degree))
    return tuple(out)
