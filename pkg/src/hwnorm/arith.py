"""Exact rationals and canonical factored rational functions of one variable.

Every quantity in the package is a rational function of the parameter
lambda whose zeros and poles are rational.  Such a function is stored as

    constant * prod(lambda + a for a in num) / prod(lambda + b for b in den)

with the two shift multisets disjoint.  Pochhammer symbols are expanded into
their linear factors, so cancellation, signs and pole orders reduce to
multiset bookkeeping.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rat = Fraction
LAMBDA = "λ"

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into a Fraction; raise ValueError otherwise."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = _RAT_RE.match(str(text))
    if not match:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def as_half(value) -> Fraction:
    """Coerce to a Fraction lying in (1/2)Z, raising ValueError if it does not."""
    value = parse_rational(value) if isinstance(value, str) else Fraction(value)
    if (2 * value).denominator != 1:
        raise ValueError(f"{value} is not a half-integer")
    return value


def fmt_rat(x: Fraction) -> str:
    """Exact text form: "p" or "p/q"."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Special(enum.Enum):
    ZERO = "ZERO"
    POLE = "POLE"


ZERO = Special.ZERO
POLE = Special.POLE


class Sign(enum.Enum):
    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"
    ZERO = "ZERO"
    POLE = "POLE"


def poch_expand(shift, length: int) -> tuple:
    """Linear factors of the rising factorial (lambda + shift)_length.

    Returned as the tuple of shifts (shift, shift + 1, ..., shift + length - 1).
    """
    if length < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    shift = Fraction(shift)
    return tuple(shift + i for i in range(length))


def rising(x, length: int) -> Fraction:
    """Numeric rising factorial (x)_length for a rational x and length >= 0."""
    if length < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    out = Fraction(1)
    x = Fraction(x)
    for i in range(length):
        out *= x + i
    return out


def _sorted(shifts: Iterable) -> tuple:
    return tuple(sorted(Fraction(s) for s in shifts))


@dataclass(frozen=True)
class FactoredFn:
    """constant * prod(lambda + num) / prod(lambda + den), kept canonical."""

    constant: Fraction = Fraction(1)
    num: tuple = ()
    den: tuple = ()

    def __post_init__(self):
        if self.constant == 0:
            raise ValueError("FactoredFn constant must be nonzero")
        top, bottom = Counter(_sorted(self.num)), Counter(_sorted(self.den))
        common = top & bottom
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "num", tuple(sorted((top - common).elements())))
        object.__setattr__(self, "den", tuple(sorted((bottom - common).elements())))

    # construction -------------------------------------------------------

    @classmethod
    def one(cls) -> "FactoredFn":
        return cls()

    @classmethod
    def linear(cls, shift) -> "FactoredFn":
        return cls(num=(Fraction(shift),))

    @classmethod
    def poch(cls, shift, length: int) -> "FactoredFn":
        """(lambda + shift)_length, extended to negative length by the Gamma rule.

        For length < 0 this is Gamma(lambda+shift+length)/Gamma(lambda+shift),
        i.e. 1/(lambda + shift + length)_{-length}.
        """
        if length >= 0:
            return cls(num=poch_expand(shift, length))
        return cls(den=poch_expand(Fraction(shift) + length, -length))

    # algebra ------------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FactoredFn(self.constant * other, self.num, self.den)
        return FactoredFn(self.constant * other.constant,
                          self.num + other.num, self.den + other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "FactoredFn":
        return FactoredFn(1 / self.constant, self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FactoredFn(self.constant / other, self.num, self.den)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    # queries ------------------------------------------------------------

    @property
    def is_monic_poly(self) -> bool:
        return not self.den and self.constant == 1

    def degree(self) -> int:
        """Degree as a rational function: len(num) - len(den)."""
        return len(self.num) - len(self.den)

    def pole_order(self, lam) -> int:
        """Order of the pole at lam; a zero of order z is reported as -z."""
        lam = Fraction(lam)
        return sum(1 for b in self.den if b == -lam) - sum(1 for a in self.num if a == -lam)

    def evaluate(self, lam):
        """Exact value at lam, or the ZERO / POLE sentinel."""
        lam = Fraction(lam)
        if any(b + lam == 0 for b in self.den):
            return POLE
        if any(a + lam == 0 for a in self.num):
            return ZERO
        value = self.constant
        for a in self.num:
            value *= lam + a
        for b in self.den:
            value /= lam + b
        return value

    def sign_at(self, lam) -> Sign:
        lam = Fraction(lam)
        if any(b + lam == 0 for b in self.den):
            return Sign.POLE
        if any(a + lam == 0 for a in self.num):
            return Sign.ZERO
        negatives = sum(1 for a in self.num + self.den if a + lam < 0)
        negatives += self.constant < 0
        return Sign.NEGATIVE if negatives % 2 else Sign.POSITIVE

    def leading_at(self, lam):
        """(pole order, leading Laurent coefficient) of the function at lam."""
        lam = Fraction(lam)
        value = self.constant
        for a in self.num:
            if a + lam != 0:
                value *= lam + a
        for b in self.den:
            if b + lam != 0:
                value /= lam + b
        return self.pole_order(lam), value

    # printing -----------------------------------------------------------

    @staticmethod
    def _factor(shift: Fraction) -> str:
        if shift == 0:
            return f"({LAMBDA})"
        sign = "+" if shift > 0 else "-"
        return f"({LAMBDA}{sign}{fmt_rat(abs(shift))})"

    @classmethod
    def _product(cls, shifts: tuple) -> str:
        parts = []
        for shift, exp in sorted(Counter(shifts).items()):
            parts.append(cls._factor(shift) + (f"^{exp}" if exp > 1 else ""))
        return "".join(parts)

    def __str__(self) -> str:
        const = self.constant
        top = self._product(self.num)
        if not top:
            top = fmt_rat(const)
        elif const == -1:
            top = "-" + top
        elif const != 1:
            top = fmt_rat(const) + top
        if not self.den:
            return top
        return f"{top}/({self._product(self.den)})"

    def to_json(self) -> dict:
        def grouped(shifts):
            return [{"shift": fmt_rat(s), "exp": e} for s, e in sorted(Counter(shifts).items())]
        return {"constant": fmt_rat(self.constant), "num": grouped(self.num), "den": grouped(self.den)}


def simplify(f: FactoredFn) -> FactoredFn:
    """Canonical form.  Construction already cancels, so this is a re-normalization."""
    return FactoredFn(f.constant, f.num, f.den)


def evaluate(f: FactoredFn, lam) -> Union[Fraction, Special]:
    return f.evaluate(lam)


def pole_order(f: FactoredFn, lam) -> int:
    return f.pole_order(lam)


def sign_at(f: FactoredFn, lam) -> Sign:
    return f.sign_at(lam)


def gamma_quotient(num_shifts, den_shifts) -> FactoredFn:
    """Reduce prod Gamma(lambda + a) / prod Gamma(lambda + b) to a FactoredFn.

    Shifts are matched inside each residue class modulo 1; within a class the
    pairing is irrelevant because the total product is the same.  Raises
    ValueError when the classes are unbalanced, since the quotient is then
    not a rational function of lambda.
    """
    classes: dict = {}
    for a in num_shifts:
        a = Fraction(a)
        classes.setdefault(a % 1, ([], []))[0].append(a)
    for b in den_shifts:
        b = Fraction(b)
        classes.setdefault(b % 1, ([], []))[1].append(b)
    out = FactoredFn()
    for residue in sorted(classes):
        tops, bottoms = classes[residue]
        if len(tops) != len(bottoms):
            raise ValueError("Gamma quotient is not a rational function of lambda")
        for a, b in zip(sorted(tops), sorted(bottoms)):
            out = out * FactoredFn.poch(b, int(a - b))
    return out
