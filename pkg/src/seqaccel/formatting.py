"""Exact fixed-point rendering of scalars in any mode."""

from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath.libmp import to_rational


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, mpmath.mpf):
        p, q = to_rational(value._mpf_)
        return Fraction(int(p), int(q))
    raise TypeError(f"cannot render {type(value).__name__}")


def format_fixed(value, digits):
    """Decimal string with ``digits`` places, rounding half to even."""
    f = to_fraction(value)
    scaled = f * 10**digits
    floor, rem = divmod(scaled.numerator, scaled.denominator)
    double = 2 * rem
    if double > scaled.denominator or (double == scaled.denominator and floor % 2):
        floor += 1
    sign = "-" if floor < 0 else ""
    floor = abs(floor)
    whole, frac = divmod(floor, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def format_exact(value):
    """Lossless text form: exact decimal if finite, else p/q."""
    f = to_fraction(value)
    den = f.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den == 1:
        return format_fixed(f, max(twos, fives))
    return f"{f.numerator}/{f.denominator}"
