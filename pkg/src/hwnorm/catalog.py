"""Group families, their Jordan structure constants, and fiber descriptions.

A GroupSpec carries the real rank r, the root multiplicities d and b, the
genus p and the dimensions n = dim p+ and n_T of the tube part.  A FiberSpec
describes the minimal K-type V that the holomorphic functions take values in.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .arith import as_half, parse_rational


class Family(enum.Enum):
    SP = "sp"
    SU = "su"
    SOSTAR = "sostar"
    SPIN = "spin"
    E6 = "e6"
    E7 = "e7"


class Kind(enum.Enum):
    """Fiber flavour for SO*(2s): dual of S^k, or the determinant twist of its dual."""

    SYM_DUAL = "dual"
    SYM_DET = "det"


@dataclass(frozen=True)
class GroupSpec:
    family: Family
    r: int
    d: int
    b: int
    n: int
    n_T: int
    p: int
    q: int = 0  # SU only, stored with q >= s
    s: int = 0  # SU: second size; SOSTAR: the s of SO*(2s); SPIN: unused
    dim: int = 0  # SPIN: the n of Spin(2, n)
    transposed: bool = False  # SU input had q < s

    @property
    def tube(self) -> bool:
        return self.b == 0

    @property
    def odd_sostar(self) -> bool:
        """SO*(4r+2) as opposed to SO*(4r)."""
        return self.family is Family.SOSTAR and self.s % 2 == 1

    @property
    def su_q(self) -> int:
        """The q of SU(q, s) as supplied by the caller."""
        return self.s if self.transposed else self.q

    @property
    def su_s(self) -> int:
        """The s of SU(q, s) as supplied by the caller (length of the fiber weight)."""
        return self.q if self.transposed else self.s

    def label(self) -> str:
        f = self.family
        if f is Family.SP:
            return f"Sp({self.r},R)"
        if f is Family.SU:
            return f"SU({self.su_q},{self.su_s})"
        if f is Family.SOSTAR:
            return f"SO*({2 * self.s})"
        if f is Family.SPIN:
            return f"Spin(2,{self.dim})"
        return "E6(-14)" if f is Family.E6 else "E7(-25)"


def _constants(r: int, d: int, b: int) -> tuple:
    n_T = r + r * (r - 1) * d // 2
    return n_T + b * r, n_T, 2 + (r - 1) * d + b


def structure_constants(family, **params) -> GroupSpec:
    """Build the GroupSpec of a family from its defining parameters."""
    family = Family(family)
    if family is Family.SP:
        r = int(params["r"])
        if r < 1:
            raise ValueError("Sp(r,R) needs r >= 1")
        n, n_T, p = _constants(r, 1, 0)
        return GroupSpec(family, r, 1, 0, n, n_T, p)
    if family is Family.SU:
        q, s = int(params["q"]), int(params["s"])
        if q < 1 or s < 1:
            raise ValueError("SU(q,s) needs q, s >= 1")
        big, small = max(q, s), min(q, s)
        n, n_T, p = _constants(small, 2, big - small)
        return GroupSpec(family, small, 2, big - small, n, n_T, p, q=big, s=small,
                         transposed=q < s)
    if family is Family.SOSTAR:
        s = int(params["s"])
        if s < 2:
            raise ValueError("SO*(2s) needs s >= 2")
        r, b = s // 2, 2 * (s % 2)
        n, n_T, p = _constants(r, 4, b)
        return GroupSpec(family, r, 4, b, n, n_T, p, s=s)
    if family is Family.SPIN:
        dim = int(params["n"])
        if dim < 3:
            raise ValueError("Spin(2,n) needs n >= 3")
        n, n_T, p = _constants(2, dim - 2, 0)
        return GroupSpec(family, 2, dim - 2, 0, n, n_T, p, dim=dim)
    if family is Family.E6:
        n, n_T, p = _constants(2, 6, 4)
        return GroupSpec(family, 2, 6, 4, n, n_T, p)
    n, n_T, p = _constants(3, 8, 0)
    return GroupSpec(family, 3, 8, 0, n, n_T, p)


@dataclass(frozen=True)
class FiberSpec:
    """The minimal K-type.

    k is an int (SP, SOSTAR, E6, E7), a tuple of ints (SU, length s of the
    caller's SU(q,s)), or a half-integer Fraction (SPIN).  kind selects the
    SO*(2s) flavour and sign the chirality of even spin fibers.
    """

    family: Family
    k: object = 0
    kind: Kind = Kind.SYM_DUAL
    sign: int = 1

    @property
    def total(self):
        """|k| for SU, k otherwise."""
        return sum(self.k) if self.family is Family.SU else self.k

    @property
    def nonzero_count(self) -> int:
        """Number of nonzero entries of an SU fiber weight (the l of the unitarity classification)."""
        return sum(1 for x in self.k if x != 0)

    @property
    def scalar(self) -> bool:
        return self.total == 0


def make_fiber(spec: GroupSpec, k=0, kind=Kind.SYM_DUAL, sign: int = 1) -> FiberSpec:
    """Validate and normalize a fiber for the given group."""
    f = spec.family
    kind = Kind(kind)
    if f is Family.SU:
        s = spec.su_s
        k = (k,) * s if isinstance(k, int) and k == 0 else tuple(int(x) for x in k)
        if len(k) != s or any(k[i] < k[i + 1] for i in range(s - 1)) or k[-1] < 0:
            raise ValueError(f"SU fiber must be a partition with {s} entries")
        return FiberSpec(f, k)
    if f is Family.SPIN:
        k = as_half(k)
        if k < 0:
            raise ValueError("spin fiber needs k >= 0")
        if spec.dim % 2 and k not in (0, Fraction(1, 2)):
            raise ValueError("odd n allows only k in {0, 1/2}")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return FiberSpec(f, k, sign=1 if spec.dim % 2 or k == 0 else sign)
    k = int(k)
    if k < 0:
        raise ValueError("fiber needs k >= 0")
    if f is Family.SP and k > spec.r - 1:
        raise ValueError("Sp(r,R) fibers need k <= r - 1")
    if f is Family.E7 and k != 0:
        raise ValueError("only the scalar fiber is supported for E7")
    if f is Family.SOSTAR:
        # the determinant twist with k = 0 is the scalar fiber
        return FiberSpec(f, k, kind if k > 0 else Kind.SYM_DUAL)
    return FiberSpec(f, k)


def convergence_threshold(spec: GroupSpec, fiber: FiberSpec) -> Fraction:
    """The t such that the holomorphic discrete series is unitary for lambda > t."""
    f = spec.family
    if f is Family.SU:
        return Fraction(spec.p - 1 - fiber.k[-1])
    return Fraction(spec.p - 1)


# ---------------------------------------------------------------- parsing

def _parse_pairs(text: str) -> dict:
    """Split "a=1,b=2,3" into {"a": ["1"], "b": ["2", "3"]}; bare tokens extend the last key."""
    out: dict = {}
    last = None
    for token in text.replace("(", "").replace(")", "").split(","):
        token = token.strip()
        if not token:
            continue
        if "=" in token:
            key, value = token.split("=", 1)
            last = key.strip().lower()
            out[last] = [value.strip()]
        elif last is None:
            raise ValueError(f"expected key=value in {text!r}")
        else:
            out[last].append(token)
    return out


def parse_group(text: str) -> GroupSpec:
    """Parse "sp:r=2", "su:q=2,s=3", "sostar:s=5", "spin:n=6", "e6", "e7"."""
    name, _, rest = text.strip().partition(":")
    try:
        family = Family(name.strip().lower())
    except ValueError:
        raise ValueError(f"unknown group family {name!r}") from None
    pairs = _parse_pairs(rest)
    params = {key: int(vals[0]) for key, vals in pairs.items()}
    needed = {Family.SP: {"r"}, Family.SU: {"q", "s"}, Family.SOSTAR: {"s"},
              Family.SPIN: {"n"}, Family.E6: set(), Family.E7: set()}[family]
    if set(params) != needed:
        raise ValueError(f"{family.value} expects parameters {sorted(needed)}")
    return structure_constants(family, **params)


def parse_fiber(spec: GroupSpec, text: str) -> FiberSpec:
    """Parse "k=1", "k=2,1,0", "k=1/2,sign=-", "k=2,kind=det"; empty means scalar."""
    pairs = _parse_pairs(text or "")
    unknown = set(pairs) - {"k", "kind", "sign"}
    if unknown:
        raise ValueError(f"unknown fiber keys {sorted(unknown)}")
    raw = pairs.get("k", ["0"])
    kind = pairs.get("kind", ["dual"])[0]
    sign_text = pairs.get("sign", ["+"])[0]
    if sign_text not in ("+", "-", "1", "-1", "+1"):
        raise ValueError(f"bad sign {sign_text!r}")
    sign = -1 if sign_text.startswith("-") else 1
    if spec.family is Family.SU:
        k = tuple(int(x) for x in raw)
        if k == (0,):
            k = 0
    elif len(raw) != 1:
        raise ValueError("k must be a single value for this family")
    elif spec.family is Family.SPIN:
        k = parse_rational(raw[0])
    else:
        k = int(raw[0])
    return make_fiber(spec, k, Kind(kind), sign)
