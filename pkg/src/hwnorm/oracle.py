"""Independent verifications: dimension counts, recurrences and numerics.

Each check returns a CheckReport whose witnesses describe every failure.
Numeric work (quadrature, log-Gamma) lives only here; the formula modules
stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from scipy import integrate

from .arith import rising
from .catalog import Family, FiberSpec, GroupSpec, Kind, make_fiber, structure_constants
from .decomp import KType, decompose, decompose_upto, hks_dim
from .norms import gamma_omega_log, gen_poch, norm_ratio, normalizing_const
from .partitions import gl_branch, weyl_dim_gl, weyl_dim_so


@dataclass
class CheckReport:
    name: str
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "witnesses": [str(w) for w in self.witnesses]}


# ------------------------------------------------------- graded dimensions

def _ktype_dim(spec: GroupSpec, t: KType) -> int:
    """Dimension of a K-type recomputed from its signature."""
    f = spec.family
    if f in (Family.SP, Family.SOSTAR):
        return weyl_dim_gl(t.signature[0], len(t.signature[0]))
    if f is Family.SU:
        left, right = t.signature
        return weyl_dim_gl(left, len(left)) * weyl_dim_gl(right, len(right))
    if f is Family.SPIN:
        return weyl_dim_so(t.signature[1], spec.dim)
    if f is Family.E6:
        return weyl_dim_so(t.signature[1], 10)
    return hks_dim(spec, t.m)


def _fiber_dim(spec: GroupSpec, fiber: FiberSpec) -> int:
    f, k = spec.family, fiber.k
    if f is Family.SP:
        return comb(spec.r, k)
    if f is Family.SU:
        return weyl_dim_gl(k, len(k))
    if f is Family.SOSTAR:
        return comb(k + spec.s - 1, k)  # S^k of C^s
    if f is Family.SPIN:
        half = spec.dim // 2
        last = k if spec.dim % 2 else fiber.sign * k
        return weyl_dim_so((k,) * (half - 1) + (last,), spec.dim)
    if f is Family.E6:
        return weyl_dim_so((k, 0, 0, 0, 0), 10)
    return 1


def graded_dim_check(spec: GroupSpec, fiber: FiberSpec, N: int) -> CheckReport:
    """sum of mult * dim over degree-d K-types equals binom(d+n-1, d) dim V for d <= N."""
    report = CheckReport(f"graded_dim {spec.label()} k={fiber.k} {fiber.kind.value}")
    dim_v = _fiber_dim(spec, fiber)
    for degree in range(N + 1):
        total = sum(t.multiplicity * _ktype_dim(spec, t) for t in decompose(spec, fiber, degree))
        expected = comb(degree + spec.n - 1, degree) * dim_v
        if total != expected:
            report.witnesses.append(f"degree {degree}: {total} != {expected}")
    return report


def two_form_check(spec: GroupSpec, fiber: FiberSpec, N: int, conjecture: bool = False) -> CheckReport:
    """Both closed ratio expressions agree for every K-type of degree <= N."""
    report = CheckReport(f"two_form {spec.label()} k={fiber.k} {fiber.kind.value}")
    for t in decompose_upto(spec, fiber, N):
        try:
            result = norm_ratio(spec, fiber, t, conjecture)
        except AssertionError as exc:
            report.witnesses.append(f"{t.m} {t.kappa}: {exc}")
            continue
        if result.formA != result.formB:
            report.witnesses.append(f"{t.m} {t.kappa}: {result.formA} != {result.formB}")
    return report


# ------------------------------------------------------------ E6 constant

def _rising(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def e6_double_sum(lam, k: int) -> Fraction:
    """1/c_lambda from the recurrence solution, weighted by so(8) dimensions."""
    lam = Fraction(lam)
    total = Fraction(0)
    for k1 in range(k + 1):
        for k2 in range(k1 + 1):
            weight = comb(k1 - k2 + 7, 7) - comb(k1 - k2 + 5, 7)
            total += Fraction(weight) / (_rising(lam + k1 - 8, 8) * _rising(lam + k2 - 11, 8))
    dim_v = comb(k + 9, 9) - comb(k + 7, 9)
    return total / dim_v


def e6_recurrence_check(k: int, samples) -> CheckReport:
    """Closed-form 1/c_lambda for E6 versus the double sum, exactly."""
    report = CheckReport(f"e6_recurrence k={k}")
    spec = structure_constants("e6")
    fiber = make_fiber(spec, k)
    closed = normalizing_const(spec, fiber)
    for lam in samples:
        lam = Fraction(lam)
        if lam <= 12:
            raise ValueError("samples must avoid the poles (lambda > 12)")
        lhs = 1 / closed.evaluate(lam)
        rhs = e6_double_sum(lam, k)
        if lhs != rhs:
            report.witnesses.append(f"lambda={lam}: {lhs} != {rhs}")
    return report


# ---------------------------------------------------------- SU(1,1) integral

def su11_integral_check(lam, m_max: int = 5, tol: float = 1e-6) -> CheckReport:
    """Radial quadrature of the weighted Bergman norm of w^m against m!/(lambda)_m."""
    lam = Fraction(lam)
    if lam <= 1:
        raise ValueError("the integral converges only for lambda > 1")
    report = CheckReport(f"su11_integral lambda={lam}")
    spec = structure_constants("su", q=1, s=1)
    fiber = make_fiber(spec, 0)
    types = {t.m: t for t in decompose_upto(spec, fiber, m_max)}
    lf = float(lam)
    for m in range(m_max + 1):
        value, err = integrate.quad(lambda x: x ** (2 * m + 1) * (1 - x * x) ** (lf - 2), 0, 1,
                                    epsabs=1e-13, epsrel=1e-12, limit=200)
        if err > tol:
            raise RuntimeError(f"quadrature did not converge for m={m}")
        norm = (lf - 1) * 2 * value
        expected = math.factorial(m) / float(_rising(lam, m))
        library = math.factorial(m) * float(norm_ratio(spec, fiber, types[(m,)]).ratio.evaluate(lam))
        if abs(norm - expected) > tol or abs(norm - library) > tol:
            report.witnesses.append(f"m={m}: quadrature {norm} vs {expected} / {library}")
    return report


# ------------------------------------------------------------- embedding

def embedding_check(r: int, k: int, N: int) -> CheckReport:
    """SO*(4r+2) ratios from the scalar SO*(4r+4) Pochhammer times (lambda)_k.

    Each K-type's U(2r+1) signature must also interlace the U(2r+2)
    signature of the scalar K-type it embeds into.
    """
    report = CheckReport(f"embedding r={r} k={k}")
    spec = structure_constants("sostar", s=2 * r + 1)
    big = structure_constants("sostar", s=2 * r + 2)
    fiber = make_fiber(spec, k, Kind.SYM_DUAL)
    prefactor = gen_poch(structure_constants("su", q=1, s=1), (k,))
    for t in decompose_upto(spec, fiber, N):
        target = tuple(a + b for a, b in zip(t.m, t.kappa)) + (t.kappa[r],)
        if any(target[i] < target[i + 1] for i in range(r)):
            report.witnesses.append(f"{t.m} {t.kappa}: {target} is not dominant")
            continue
        doubled = tuple(x for x in target for _ in range(2))
        if tuple(t.signature[0]) not in {tuple(Fraction(x) for x in n)
                                         for n in gl_branch(doubled, 2 * r + 2)}:
            report.witnesses.append(f"{t.m} {t.kappa}: signature not in branching of {doubled}")
        expected = prefactor / gen_poch(big, target)
        got = norm_ratio(spec, fiber, t).ratio
        if got != expected:
            report.witnesses.append(f"{t.m} {t.kappa}: {got} != {expected}")
    return report


# ----------------------------------------------------------- Gamma numerics

def gamma_poch_numeric_check(spec: GroupSpec, lam, m, tol: float = 1e-9) -> CheckReport:
    """Gamma_Omega(lambda + m) / Gamma_Omega(lambda) against the exact Pochhammer."""
    report = CheckReport(f"gamma_poch {spec.label()} lambda={lam} m={tuple(m)}")
    lam = Fraction(lam)
    m = tuple(m) + (0,) * (spec.r - len(m))
    log_ratio = (gamma_omega_log(spec, [lam + x for x in m])
                 - gamma_omega_log(spec, [lam] * spec.r))
    exact = float(gen_poch(spec, m).evaluate(lam))
    numeric = math.exp(log_ratio)
    if abs(numeric - exact) > tol * abs(exact):
        report.witnesses.append(f"{numeric} vs {exact}")
    return report


def cnorm_gamma_check(spec: GroupSpec, fiber: FiberSpec, lam, tol: float = 1e-9) -> CheckReport:
    """Tube-type c_lambda against Gamma_Omega(lambda+k)/Gamma_Omega(lambda+k-n/r) numerically."""
    from .norms import restricted_weight
    report = CheckReport(f"cnorm_gamma {spec.label()} k={fiber.k} lambda={lam}")
    lam = Fraction(lam)
    kk = restricted_weight(spec, fiber)
    shift = Fraction(spec.n, spec.r)
    log_ratio = (gamma_omega_log(spec, [lam + x for x in kk])
                 - gamma_omega_log(spec, [lam + x - shift for x in kk]))
    exact = float(normalizing_const(spec, fiber).evaluate(lam))
    if abs(math.exp(log_ratio) - exact) > tol * abs(exact):
        report.witnesses.append(f"{math.exp(log_ratio)} vs {exact}")
    return report


def sostar_odd_cnorm_check(r: int, k: int, kind: Kind, samples) -> CheckReport:
    """SO*(4r+2) c_lambda against the sum over S^k of C^{2r} restricted to U(2r) x U(1).

    Each summand is a product of reciprocal rising factorials of length 2r+1
    weighted by dim S^l(C^{2r}); the total is averaged over dim S^k(C^{2r+1}).
    """
    kind = Kind(kind)
    report = CheckReport(f"sostar_cnorm r={r} k={k} {kind.value}")
    spec = structure_constants("sostar", s=2 * r + 1)
    closed = normalizing_const(spec, make_fiber(spec, k, kind))
    width = 2 * r + 1
    for lam in samples:
        lam = Fraction(lam)
        total = Fraction(0)
        for l in range(k + 1):
            if kind is Kind.SYM_DUAL:
                v = (l,) + (0,) * (r - 1)
            else:
                v = (k,) * (r - 1) + (k - l,)
            term = Fraction(comb(2 * r + l - 1, l))
            for j, vj in enumerate(v):
                term /= rising(lam + vj - 2 * j - width, width)
            total += term
        total /= comb(2 * r + k, k)
        if total != 1 / closed.evaluate(lam):
            report.witnesses.append(f"lambda={lam}: {1 / total} != {closed.evaluate(lam)}")
    return report


def isomorphism_check() -> CheckReport:
    """c_lambda agrees across the low-rank isomorphisms of the families."""
    report = CheckReport("cnorm_isomorphisms")
    half = Fraction(1, 2)
    pairs = [
        (("sp", {"r": 1}, 0), ("su", {"q": 1, "s": 1}, 0)),
        (("sp", {"r": 2}, 0), ("spin", {"n": 3}, 0)),
        (("sp", {"r": 2}, 1), ("spin", {"n": 3}, half)),
        (("su", {"q": 2, "s": 2}, 0), ("spin", {"n": 4}, 0)),
        (("sostar", {"s": 4}, 0), ("spin", {"n": 6}, 0)),
        (("sostar", {"s": 4}, 2), ("spin", {"n": 6}, 1)),
    ]
    for (fa, pa, ka), (fb, pb, kb) in pairs:
        sa, sb = structure_constants(fa, **pa), structure_constants(fb, **pb)
        ca = normalizing_const(sa, make_fiber(sa, ka))
        cb = normalizing_const(sb, make_fiber(sb, kb))
        if ca != cb:
            report.witnesses.append(f"{sa.label()} k={ka}: {ca} vs {sb.label()} k={kb}: {cb}")
    return report


# ----------------------------------------------------------------- suites

def acceptance_configs():
    """The (spec, fiber) pairs exercised by the acceptance criteria."""
    half = Fraction(1, 2)
    rows = [("sp", {"r": 2}, 0, "dual", 1), ("sp", {"r": 2}, 1, "dual", 1),
            ("sp", {"r": 3}, 2, "dual", 1),
            ("su", {"q": 2, "s": 2}, (2, 1), "dual", 1), ("su", {"q": 1, "s": 3}, (1, 1, 0), "dual", 1),
            ("sostar", {"s": 4}, 2, "dual", 1), ("sostar", {"s": 4}, 2, "det", 1),
            ("sostar", {"s": 5}, 1, "dual", 1), ("sostar", {"s": 5}, 1, "det", 1),
            ("spin", {"n": 6}, 1, "dual", 1), ("spin", {"n": 6}, 1, "dual", -1),
            ("spin", {"n": 7}, half, "dual", 1),
            ("e6", {}, 0, "dual", 1), ("e6", {}, 1, "dual", 1), ("e7", {}, 0, "dual", 1)]
    out = []
    for family, params, k, kind, sign in rows:
        spec = structure_constants(family, **params)
        out.append((spec, make_fiber(spec, k, Kind(kind), sign)))
    return out


def _suite_graded():
    return [graded_dim_check(s, f, 6) for s, f in acceptance_configs()]


def _suite_twoform():
    return [two_form_check(s, f, 6, conjecture=True) for s, f in acceptance_configs()]


def _suite_e6():
    return [e6_recurrence_check(k, [13, Fraction(27, 2), 15]) for k in range(4)]


def _suite_su11():
    return [su11_integral_check(lam, 5, 1e-6) for lam in (3, 4)]


def _suite_embedding():
    return [embedding_check(r, k, 4) for r in (1, 2) for k in (0, 1, 2)]


def _suite_gamma():
    return [gamma_poch_numeric_check(structure_constants("sp", r=2), 5, (2, 1)),
            gamma_poch_numeric_check(structure_constants("sp", r=2), 5, (0, 0)),
            gamma_poch_numeric_check(structure_constants("e7"), 20, (1, 1, 1))]


def _suite_cnorm():
    out = [isomorphism_check()]
    samples = [20, Fraction(41, 2), 33]
    for spec, fiber in acceptance_configs():
        if spec.tube:
            out.extend(cnorm_gamma_check(spec, fiber, lam) for lam in samples)
    out.extend(sostar_odd_cnorm_check(r, k, kind, samples)
               for r in (1, 2) for k in (0, 1, 2, 3) for kind in (Kind.SYM_DUAL, Kind.SYM_DET)
               if k > 0 or kind is Kind.SYM_DUAL)
    return out


SUITES = {"graded": _suite_graded, "twoform": _suite_twoform, "e6": _suite_e6,
          "su11": _suite_su11, "embedding": _suite_embedding, "gamma": _suite_gamma,
          "cnorm": _suite_cnorm}


def run_suite(name: str) -> list:
    """Run one named suite, or every suite for "all"."""
    if name == "all":
        return [report for suite in SUITES.values() for report in suite()]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[name]()
