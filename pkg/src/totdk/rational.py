"""Exact rational arithmetic, backed by fractions.Fraction.

Every sawtooth and Dedekind-sum quantity in this package is a Fraction:
arbitrary-precision, always in lowest terms, always with a positive
denominator.  No floating point enters the computational core; decimal
rendering, where it exists at all, is display-only.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

Rational = Fraction


def rational(p: int, q: int = 1) -> Fraction:
    """Build p/q reduced to lowest terms with positive denominator."""
    if q == 0:
        raise DomainError("zero denominator")
    return Fraction(p, q)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise DomainError("division by zero")
    return a / b


def rat_floor(x: Fraction | int) -> int:
    """Floor toward minus infinity, so rat_frac stays in [0, 1)."""
    return math.floor(x)


def rat_frac(x: Fraction | int) -> Fraction:
    """Fractional part x - floor(x), always in [0, 1)."""
    return Fraction(x) - math.floor(x)


def format_rational(x: Fraction | int) -> str:
    """Canonical text form: "p/q", with integers rendered plain ("0/1" -> "0")."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the canonical "p/q" form (or a bare integer)."""
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise DomainError("zero denominator") from None
    except ValueError:
        raise DomainError(f"not a rational: {text!r}") from None
