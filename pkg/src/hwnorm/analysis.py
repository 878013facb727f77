"""Unitarity, reducibility, submodule filtrations and Gelfand-Kirillov dimensions.

Closed forms follow the classification family by family.  Scans recompute the same answers from the norm ratios: the
kernel 1/R must have no negative coefficient for unitarity, and a pole of
some R at lambda witnesses a proper submodule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import Sign, fmt_rat
from .catalog import Family, FiberSpec, GroupSpec, Kind
from .decomp import KType, decompose_upto
from .norms import norm_ratio

HALF = Fraction(1, 2)


def _is_int(x) -> bool:
    return Fraction(x).denominator == 1


def _ceil(x) -> int:
    return math.ceil(Fraction(x))


def _check_covered(spec: GroupSpec):
    if spec.family in (Family.E6, Family.E7):
        raise ValueError(f"{spec.label()} is not covered by the closed-form classification")


# ------------------------------------------------------------ unitary sets

@dataclass(frozen=True)
class UnitarySet:
    continuous_min: Fraction
    discrete: tuple

    def __contains__(self, lam) -> bool:
        lam = Fraction(lam)
        return lam > self.continuous_min or lam in self.discrete

    def to_json(self) -> dict:
        return {"continuous_min": fmt_rat(self.continuous_min),
                "discrete": [fmt_rat(x) for x in self.discrete]}

    def __str__(self) -> str:
        points = ", ".join(fmt_rat(x) for x in self.discrete)
        return f"{{{points}}} ∪ ({fmt_rat(self.continuous_min)}, ∞)"


def _su_normalize(spec: GroupSpec, fiber: FiberSpec, lam=0):
    """Shift an SU fiber so its last entry is zero.

    Tensoring with a power c of the determinant changes nothing except
    lambda -> lambda + c, so closed forms are evaluated on (k - c, lambda + c).
    """
    c = fiber.k[-1]
    kk = tuple(x - c for x in fiber.k)
    return spec.su_q, spec.su_s, kk, sum(1 for x in kk if x), Fraction(lam) + c, c


def unitary_set(spec: GroupSpec, fiber: FiberSpec) -> UnitarySet:
    """Parameters lambda for which a nonzero unitary submodule exists."""
    _check_covered(spec)
    f, r, k = spec.family, spec.r, fiber.k
    if f is Family.SP:
        top = Fraction(r - 1, 2)
        pts = [Fraction(j, 2) for j in range(k, r)]
        return UnitarySet(top, tuple(pts))
    if f is Family.SU:
        q, s, kk, l, _, c = _su_normalize(spec, fiber)
        top = min(q + l, s) - 1
        return UnitarySet(Fraction(top - c), tuple(Fraction(x - c) for x in range(l, top + 1)))
    if f is Family.SOSTAR:
        s = spec.s
        if fiber.kind is Kind.SYM_DET and k > 0:
            return UnitarySet(Fraction(s - 2), (Fraction(s - 2),))
        if k == 0:
            top = 2 * (s // 2 - 1)
            return UnitarySet(Fraction(top), tuple(Fraction(x) for x in range(0, top + 1, 2)))
        top = 2 * (-(-s // 2) - 1)
        return UnitarySet(Fraction(top), tuple(Fraction(x) for x in range(2, top + 1, 2)))
    top = Fraction(spec.dim - 2, 2)
    pts = (Fraction(0), top) if k == 0 else (top,)
    return UnitarySet(top, tuple(sorted(set(pts))))


# ------------------------------------------------------------------ scans

@dataclass(frozen=True)
class ScanResult:
    compatible: bool
    witness: KType = None
    conjectural: bool = False


@lru_cache(maxsize=None)
def _ratio_table(spec, fiber, N, conjecture):
    rows = []
    for t in decompose_upto(spec, fiber, N):
        res = norm_ratio(spec, fiber, t, conjecture)
        if res.unknown_numerator_degree:
            from .norms import ConjecturalContentError
            raise ConjecturalContentError(
                "E6 scans with k > 0 need the conjecture flag")
        rows.append((t, res.ratio, res.conjectural))
    return tuple(rows)


def unitary_scan(spec: GroupSpec, fiber: FiberSpec, lam, N: int = 8,
                 conjecture: bool = False) -> ScanResult:
    """COMPATIBLE unless some kernel coefficient 1/R is negative at lam (degree <= N)."""
    rows = _ratio_table(spec, fiber, N, conjecture)
    conj = any(c for _, _, c in rows)
    for t, ratio, _ in rows:
        if ratio.reciprocal().sign_at(lam) is Sign.NEGATIVE:
            return ScanResult(False, t, conj)
    return ScanResult(True, None, conj)


def reducible_scan(spec: GroupSpec, fiber: FiberSpec, lam, N: int = 8,
                   conjecture: bool = False) -> ScanResult:
    """Whether some R has a pole at lam among K-types of degree <= N (witness attached)."""
    rows = _ratio_table(spec, fiber, N, conjecture)
    conj = any(c for _, _, c in rows)
    for t, ratio, _ in rows:
        if ratio.pole_order(lam) > 0:
            return ScanResult(True, t, conj)
    return ScanResult(False, None, conj)


# ---------------------------------------------------- closed reducibility

def reducible(spec: GroupSpec, fiber: FiberSpec, lam) -> bool:
    """Reducibility of the polynomial module at lam, read literally from the classification."""
    _check_covered(spec)
    lam = Fraction(lam)
    f, r, k = spec.family, spec.r, fiber.k
    if f is Family.SP:
        return lam <= Fraction(r - 1, 2) and _is_int(2 * lam)
    if f is Family.SU:
        q, s, kk, l, lam, _ = _su_normalize(spec, fiber, lam)
        if not (_is_int(lam) and lam <= min(q + l, s) - 1):
            return False
        # k is 1-based in the classification: k_j = kk[j-1]
        return not any(lam == j - kk[j - 1] == j - kk[j - q] for j in range(q + 1, s + 1))
    if f is Family.SOSTAR:
        if not _is_int(lam):
            return False
        if not spec.odd_sostar:
            return lam <= 2 * r - 2
        if fiber.kind is Kind.SYM_DUAL:
            bound = 2 * r if k >= 1 else 2 * r - 2
            return lam <= bound and (r, lam) != (1, -k + 1)
        return lam <= 2 * r - 1 and lam != 2 * r - k - 1
    s = spec.dim // 2
    if spec.dim % 2 == 0:
        return lam <= s - 1 and _is_int(lam)
    return ((lam <= s - HALF and _is_int(lam - HALF))
            or (lam <= -2 * k and _is_int(lam)))


# ---------------------------------------------------------- filtrations

def level_member(spec: GroupSpec, fiber: FiberSpec, t: KType, j: int, lam) -> bool:
    """Whether K-type t lies in the inequality-defined level M_j(lam) (j is 1-based)."""
    lam = Fraction(lam)
    f, r, k = spec.family, spec.r, fiber.k
    if f is Family.SP:
        return t.m[j - 1] + t.kappa[j - 1] < Fraction(j, 2) - lam + HALF
    if f is Family.SU:
        return t.n[j - 1] < j - lam
    if f is Family.SOSTAR:
        odd = spec.odd_sostar
        if odd and j == r + 1:
            if fiber.kind is Kind.SYM_DUAL:
                return t.kappa[r] < 2 * r - lam + 1
            return k - t.kappa[r] < 2 * r - lam
        if fiber.kind is Kind.SYM_DUAL:
            return t.m[j - 1] + t.kappa[j - 1] < 2 * j - lam - 1
        return t.m[j - 1] - t.kappa[j - 1] + k < 2 * j - lam - 1
    m1, m2 = t.m
    if j == 1:
        return m1 + k + t.l < 1 - lam
    return m2 + k - t.l < Fraction(spec.dim, 2) - lam


def level_predicate(spec: GroupSpec, fiber: FiberSpec, j: int, lam) -> str:
    """Human-readable membership inequality of M_j(lam)."""
    lam = Fraction(lam)
    f, r, k = spec.family, spec.r, fiber.k
    if f is Family.SP:
        return f"m_{j}+k_{j} < {fmt_rat(Fraction(j, 2) - lam + HALF)}"
    if f is Family.SU:
        return f"n_{j} < {fmt_rat(j - lam)}"
    if f is Family.SOSTAR:
        if spec.odd_sostar and j == r + 1:
            if fiber.kind is Kind.SYM_DUAL:
                return f"k_{j} < {fmt_rat(2 * r - lam + 1)}"
            return f"{k}-k_{j} < {fmt_rat(2 * r - lam)}"
        if fiber.kind is Kind.SYM_DUAL:
            return f"m_{j}+k_{j} < {fmt_rat(2 * j - lam - 1)}"
        return f"m_{j}-k_{j}+{k} < {fmt_rat(2 * j - lam - 1)}"
    if j == 1:
        return f"m_1+{fmt_rat(k)}+l < {fmt_rat(1 - lam)}"
    return f"m_2+{fmt_rat(k)}-l < {fmt_rat(Fraction(spec.dim, 2) - lam)}"


@dataclass(frozen=True)
class Filtration:
    lam: Fraction
    a: int
    b: int
    step: int
    levels: tuple  # the chain M_a, M_{a+step}, ..., M_b; empty when a > b
    unitary_levels: tuple = ()  # levels j with M_j(lam) known to be unitary
    unitary_quotient: bool = False  # P / M_b known to be unitary

    @property
    def unitary_sub(self) -> bool:
        return bool(self.levels) and self.levels[0] in self.unitary_levels


def _chain(spec: GroupSpec, fiber: FiberSpec, lam: Fraction):
    """(a, b, step, unitary sub levels, unitary quotient level) from the case tables."""
    f, r, k = spec.family, spec.r, fiber.k
    if f is Family.SP:
        if Fraction(k, 2) <= lam <= Fraction(r - 1, 2):
            a = 2 * lam + 1
        elif 0 <= lam <= Fraction(k - 1, 2):
            a = 2 * lam + 3
        elif lam <= -HALF and _is_int(lam):
            a = 1
        else:
            a = 2
        b = r - 1 if (2 * lam - r) % 2 == 0 else r
        sub = [2 * lam + 1] if lam in [Fraction(x, 2) for x in range(k, r)] else []
        quot = r if (2 * lam - r) % 2 else None
        return int(a), b, 2, sub, quot
    if f is Family.SU:
        q, s, kk, l, lam, _ = _su_normalize(spec, fiber, lam)
        K = lambda j: kk[j - 1] if j >= 1 else math.inf  # 1-based fiber entries
        t = min(q + l, s)
        a = 1 if lam <= -K(1) else None
        if a is None:
            for j in range(1, t):
                if j - K(j) <= lam <= j - K(j + 1):
                    a = j + 1
                    break
        if q >= s:
            b = s
        elif t - K(min(l, s - q)) <= lam <= t - 1:
            b = t
        else:
            b = next((j for j in range(q + 1, t) if j - K(j - q) <= lam <= j - K(j - q + 1)), None)
            if b is None and lam <= q - K(1):
                b = q
        if q >= s or l == 0:
            sub = [lam + 1] if l <= lam <= min(q, s) - 1 else []
            quot = min(q, s)
        else:
            sub = [lam + 1] if l <= lam <= t - 1 else []
            quot = t if t - K(min(l, s - q)) <= lam <= t - 1 else None
        return a, b, 1, [int(x) for x in sub], quot
    if f is Family.SOSTAR:
        odd, dual = spec.odd_sostar, fiber.kind is Kind.SYM_DUAL
        if not odd and dual:
            if 3 <= lam <= 2 * r - 2:
                a = _ceil(lam / 2) + 1
            elif -k + 1 <= lam <= 2:
                a = 2
            else:
                a = 1
            evens = range(2 if k >= 1 else 0, 2 * r - 1, 2)
            sub = [int(lam / 2) + 1] if lam in evens else []
            return a, r, 1, sub, r
        if not odd:
            if 2 * r - 3 - k <= lam <= 2 * r - 2:
                a = r
            elif -k + 1 <= lam <= 2 * r - 4 - k:
                a = _ceil((lam + k) / 2) + 1
            else:
                a = 1
            return a, r, 1, [r] if lam == 2 * r - 2 else [], r
        if dual:
            if 3 <= lam <= 2 * r:
                a = _ceil(lam / 2) + 1
            elif -k + 1 <= lam <= 2:
                a = 2
            else:
                a = 1
            b = r + 1 if 2 * r + 1 - k <= lam <= 2 * r else r
            if k == 0:
                sub = [int(lam / 2) + 1] if lam in range(0, 2 * r - 1, 2) else []
                quot = r
            else:
                sub = [int(lam / 2) + 1] if lam in range(2, 2 * r + 1, 2) else []
                quot = r + 1 if 2 * r + 1 - k <= lam <= 2 * r else None
            return a, b, 1, sub, quot
        if 2 * r - k <= lam <= 2 * r - 1:
            a, b = r + 1, r + 1
        elif -k + 1 <= lam <= 2 * r - 2 - k:
            a, b = _ceil((lam + k) / 2) + 1, r
        else:
            a, b = 1, r
        sub = [r + 1] if lam == 2 * r - 1 else []
        quot = r + 1 if 2 * r - k <= lam <= 2 * r - 1 else None
        return a, b, 1, sub, quot
    s = spec.dim // 2
    sub = []
    if k == 0 and lam == 0:
        sub.append(1)
    if spec.dim % 2 == 0:
        a = 2 if 1 - 2 * k <= lam <= s - 1 else 1
        if lam == s - 1:
            sub.append(2)
        return a, 2, 1, sub, 2
    if _is_int(lam - HALF):
        if lam == s - HALF:
            sub.append(2)
        return 2, 2, 1, sub, 2
    return 1, 1, 1, sub, None


def filtration(spec: GroupSpec, fiber: FiberSpec, lam) -> Filtration:
    """The submodule chain at a reducible point, with the known unitarity flags."""
    lam = Fraction(lam)
    if not reducible(spec, fiber, lam):
        raise ValueError(f"lambda = {fmt_rat(lam)} is an irreducible point")
    a, b, step, sub, quot = _chain(spec, fiber, lam)
    levels = tuple(range(a, b + 1, step)) if a is not None and b is not None else ()
    return Filtration(lam, a, b, step, levels,
                      tuple(j for j in sub if j in levels),
                      bool(levels) and quot == b)


@dataclass(frozen=True)
class PoleCheck:
    passed: bool
    witnesses: tuple = field(default=())


def filtration_pole_check(spec: GroupSpec, fiber: FiberSpec, lam, N: int = 8) -> PoleCheck:
    """Inequality-defined level membership versus pole orders of R at lam.

    The i-th level of the chain (i = 0 for M_a) must hold exactly the
    K-types whose ratio has a pole of order at most i; K-types outside every
    level carry the top order len(levels).
    """
    filt = filtration(spec, fiber, lam)
    bad = []
    for t, ratio, _ in _ratio_table(spec, fiber, N, False):
        order = max(ratio.pole_order(lam), 0)
        member = [level_member(spec, fiber, t, j, lam) for j in filt.levels]
        expected = [order <= i for i in range(len(filt.levels))]
        if member != expected or order > len(filt.levels):
            bad.append((t, order, tuple(member)))
    return PoleCheck(not bad, tuple(bad))


def nested_check(spec: GroupSpec, fiber: FiberSpec, lam, N: int = 8) -> bool:
    """Each level is contained in the next one along the chain."""
    filt = filtration(spec, fiber, lam)
    for t in decompose_upto(spec, fiber, N):
        member = [level_member(spec, fiber, t, j, lam) for j in filt.levels]
        if any(x and not y for x, y in zip(member, member[1:])):
            return False
    return True


# ------------------------------------------------------ GK dimensions

def gk_dim(spec: GroupSpec, l: int) -> int:
    """dim of the K_C-orbit O_l in p+: l + l(2r-l-1)d/2 + l b."""
    if not 0 <= l <= spec.r:
        raise ValueError("orbit index must satisfy 0 <= l <= r")
    return l + l * (2 * spec.r - l - 1) * spec.d // 2 + l * spec.b


@dataclass(frozen=True)
class SubquotientInfo:
    level: object  # chain index j, or "quotient" for P / M_b
    orbit: int
    gk_dim: int
    unitary: bool
    label: str


def subquotient_report(spec: GroupSpec, fiber: FiberSpec, lam) -> list:
    """GK dimension and known unitarity of each layer of the chain."""
    filt = filtration(spec, fiber, lam)
    out = []
    for idx, j in enumerate(filt.levels):
        orbit = min(j - 1, spec.r)
        label = ("smallest submodule (irreducible)" if idx == 0
                 else "subquotient (irreducibility unknown)")
        out.append(SubquotientInfo(j, orbit, gk_dim(spec, orbit), j in filt.unitary_levels, label))
    out.append(SubquotientInfo("quotient", spec.r, gk_dim(spec, spec.r), filt.unitary_quotient,
                               "top quotient (irreducibility unknown)"))
    return out


def filtration_report(spec: GroupSpec, fiber: FiberSpec, lam) -> dict:
    """JSON-ready summary of the chain at lam."""
    lam = Fraction(lam)
    if not reducible(spec, fiber, lam):
        return {"lambda": fmt_rat(lam), "reducible": False, "chain": [], "quotient": None,
                "conjectural": False}
    report = subquotient_report(spec, fiber, lam)
    chain = [{"j": info.level, "predicate": level_predicate(spec, fiber, info.level, lam),
              "gk_dim": info.gk_dim, "unitary": info.unitary, "label": info.label}
             for info in report[:-1]]
    top = report[-1]
    return {"lambda": fmt_rat(lam), "reducible": True, "chain": chain,
            "quotient": {"gk_dim": top.gk_dim, "unitary": top.unitary}, "conjectural": False}
