"""Exact rational arithmetic and elementary number-theoretic helpers.

Every quantity in this package is a ``fractions.Fraction``: an exact,
always-reduced p/q with a positive denominator and arbitrary-precision
integer parts.  There is no floating point anywhere in the computational
core, so every inequality the solvers report is checked with equality-grade
exactness.

Irrational inputs are admitted through a stand-in convention: a named
constant such as ``sqrt2`` or ``pi`` is truncated (toward zero) to a fixed
number of decimal digits at parse time and converted exactly to a Fraction.
All downstream guarantees then hold exactly for the stand-in.  The stand-in
is reproducible bit-for-bit from the precision parameter alone.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .errors import InvalidInputError

# The universal number type of this package.
Rational = Fraction

#: Decimal digits kept when a named constant is turned into a stand-in.
DEFAULT_PRECISION = 64

#: Named constants accepted by :func:`parse_real`.
CONSTANT_NAMES = ("sqrt2", "sqrt3", "sqrt5", "phi", "e", "pi")

_SQUARE_ROOTS = {"sqrt2": 2, "sqrt3": 3, "sqrt5": 5}


def reduce(num: int, den: int) -> Fraction:
    """Return the reduced fraction num/den with a positive denominator."""
    if den == 0:
        raise InvalidInputError("denominator must be nonzero")
    return Fraction(num, den)


def mediant(a: Fraction, b: Fraction) -> Fraction:
    """Mediant (num(a)+num(b))/(den(a)+den(b)), reduced.

    For a < b the mediant lies strictly between a and b.
    """
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


def nearest_int_distance(x: Fraction) -> Fraction:
    """Distance from x to the nearest integer; always in [0, 1/2]."""
    f = x - math.floor(x)
    return min(f, 1 - f)


def integral_part(x: Fraction) -> int:
    """floor(x), so integral_part(-1/4) == -1."""
    return math.floor(x)


def fractional_part(x: Fraction) -> Fraction:
    """x - floor(x), always in [0, 1)."""
    return x - math.floor(x)


def format_rational(x: Fraction) -> str:
    """Canonical text form "num/den" with den > 0, e.g. "-1/3", "0/1"."""
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or a decimal literal (exponents allowed) exactly."""
    s = text.strip()
    if not s:
        raise InvalidInputError("empty rational literal")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise InvalidInputError(f"zero denominator in {text!r}") from None
    except ValueError:
        raise InvalidInputError(f"cannot parse {text!r} as a rational") from None


def parse_real(text: str, precision: int = DEFAULT_PRECISION) -> Fraction:
    """Parse a fraction, a decimal literal, or a named constant.

    Fractions and decimals convert exactly.  A named constant from
    ``CONSTANT_NAMES`` is truncated toward zero to ``precision`` decimal
    digits and converted exactly; the result is the stand-in used by all
    downstream arithmetic.
    """
    if not isinstance(precision, int) or precision < 1:
        raise InvalidInputError("precision must be a positive integer")
    s = text.strip()
    if not s:
        raise InvalidInputError("empty real literal")
    name = s.lower()
    if name in _SQUARE_ROOTS:
        scale = 10**precision
        return Fraction(math.isqrt(_SQUARE_ROOTS[name] * scale * scale), scale)
    if name == "phi":
        # (1 + sqrt(5))/2 scaled: floor((a + s)/2) == (a + floor(s)) // 2
        # for irrational s and integer a.
        scale = 10**precision
        return Fraction((scale + math.isqrt(5 * scale * scale)) // 2, scale)
    if name in ("pi", "e"):
        return Fraction(_scaled_floor(name, precision), 10**precision)
    if s[0].isalpha():
        raise InvalidInputError(
            f"unknown constant name {text!r}; known: {', '.join(CONSTANT_NAMES)}"
        )
    return parse_rational(s)


def _scaled_floor(name: str, precision: int) -> int:
    # floor(c * 10**precision) for c in {pi, e}.  mpmath evaluates the
    # constant with guard digits; the result is accepted only once two
    # successive precisions agree, which makes it independent of the
    # starting guard size.
    constant = {"pi": mpmath.pi, "e": mpmath.e}[name]
    guard = 30
    prev = None
    while True:
        with mpmath.workdps(precision + guard):
            cur = int(mpmath.floor(+constant * mpmath.mpf(10) ** precision))
        if cur == prev:
            return cur
        prev = cur
        guard *= 2
