"""Exact Gaussian-rational numbers: a + b*i with arbitrary-precision rational parts.

This is the coefficient field for everything else in the package.  Floats are
rejected everywhere so no rounding error can ever enter a computation; the wire
format for rationals is the decimal-free string "p/q" (or "p" when q = 1).
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["GaussRational", "parse_rational", "format_rational", "ZERO", "ONE", "I"]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse a decimal-free rational string "p/q" or "p"."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a decimal-free rational: {text!r}")
    return Fraction(s)


def format_rational(q: Fraction) -> str:
    """Inverse of parse_rational; Fraction's str form is already "p/q" or "p"."""
    return str(q)


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        f"exact arithmetic only: expected int or Fraction, got {type(value).__name__}"
    )


class GaussRational:
    """Immutable complex number with Fraction real and imaginary parts.

    Fraction keeps itself in lowest terms with a positive denominator, which
    gives us a unique representation for free.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _coerce(re))
        object.__setattr__(self, "im", _coerce(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    # -- ring / field operations -------------------------------------------

    def __add__(self, other) -> "GaussRational":
        other = _promote(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussRational":
        other = _promote(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussRational":
        other = _promote(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other) -> "GaussRational":
        other = _promote(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussRational":
        other = _promote(other)
        if other is NotImplemented:
            return NotImplemented
        n2 = other.norm_squared()
        if n2 == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        conj = other.conjugate()
        num = self * conj
        return GaussRational(num.re / n2, num.im / n2)

    def __rtruediv__(self, other) -> "GaussRational":
        other = _promote(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self) -> "GaussRational":
        return ONE / self

    # -- involutions and predicates ----------------------------------------

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        """|q|^2 = q * conj(q); always a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other) -> bool:
        other = _promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussRational({self.re})"
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    # -- serialization --------------------------------------------------------

    def to_strings(self) -> tuple[str, str]:
        return format_rational(self.re), format_rational(self.im)

    @classmethod
    def from_strings(cls, re: str, im: str) -> "GaussRational":
        return cls(parse_rational(re), parse_rational(im))


def _promote(value):
    if isinstance(value, GaussRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussRational(value)
    return NotImplemented


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)
