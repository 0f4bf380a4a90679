"""Scalar arithmetic modes.

Three modes are supported:

* ``FLOAT64`` -- ordinary Python floats,
* ``BigFloat(bits)`` -- mpmath floats at a fixed binary precision,
* ``RATIONAL`` -- :class:`fractions.Fraction`, exactly closed under
  field operations.

A mode object knows how to coerce and parse values, supplies the
transcendental constants and functions needed by the sequence
generators, and provides a context manager that pins the working
precision for the duration of a table computation.
"""

from __future__ import annotations

import math
from contextlib import nullcontext
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import ModeUnsupportedError


def _parse_number(text):
    """Parse a decimal literal or a p/q fraction string to a Fraction."""
    return Fraction(text.strip())


@dataclass(frozen=True)
class Float64:
    name: str = "float64"
    is_exact: bool = False
    default_breakdown_threshold: float = 1e-12

    def convert(self, x):
        return float(x)

    def parse(self, text):
        return float(_parse_number(text))

    def context(self):
        return nullcontext()

    def pi(self):
        return math.pi

    def log(self, x):
        return math.log(x)

    def sin(self, x):
        return math.sin(x)

    def exp(self, x):
        return math.exp(x)

    def zeta(self, s):
        return float(mpmath.zeta(s))


@dataclass(frozen=True)
class BigFloat:
    precision_bits: int = 128

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("BigFloat precision must be at least 64 bits")

    @property
    def name(self):
        return f"bigfloat{self.precision_bits}"

    is_exact = False

    @property
    def default_breakdown_threshold(self):
        # leave ~24 bits of headroom above the unit roundoff
        return 2.0 ** (24 - self.precision_bits)

    def convert(self, x):
        with self.context():
            if isinstance(x, Fraction):
                return mpmath.mpf(x.numerator) / x.denominator
            return mpmath.mpf(x)

    def parse(self, text):
        return self.convert(_parse_number(text))

    def context(self):
        return mpmath.mp.workprec(self.precision_bits)

    def pi(self):
        with self.context():
            return +mpmath.pi

    def log(self, x):
        with self.context():
            return mpmath.log(x)

    def sin(self, x):
        with self.context():
            return mpmath.sin(x)

    def exp(self, x):
        with self.context():
            return mpmath.exp(x)

    def zeta(self, s):
        with self.context():
            return mpmath.zeta(s)


@dataclass(frozen=True)
class Rational:
    name: str = "rational"
    is_exact: bool = True
    default_breakdown_threshold: int = 0

    def convert(self, x):
        return Fraction(x)

    def parse(self, text):
        return _parse_number(text)

    def context(self):
        return nullcontext()

    def _unsupported(self, what):
        raise ModeUnsupportedError(f"{what} is not an exact rational")

    def pi(self):
        self._unsupported("pi")

    def log(self, x):
        self._unsupported(f"log({x})")

    def sin(self, x):
        self._unsupported(f"sin({x})")

    def exp(self, x):
        self._unsupported(f"exp({x})")

    def zeta(self, s):
        self._unsupported(f"zeta({s})")


FLOAT64 = Float64()
RATIONAL = Rational()


def mode_from_name(name, precision_bits=128):
    name = name.lower()
    if name == "float64":
        return FLOAT64
    if name == "rational":
        return RATIONAL
    if name == "bigfloat":
        return BigFloat(precision_bits)
    raise ValueError(f"unknown scalar mode {name!r}")


def negligible_difference(diff, a, b, mode, threshold):
    """Breakdown guard for a difference factor ``diff = b - a``.

    Exact mode tests for literal zero; float modes compare against
    ``threshold`` relative to the larger operand magnitude.
    """
    if diff == 0:
        return True
    if mode.is_exact:
        return False
    scale = max(abs(a), abs(b))
    return abs(diff) < threshold * scale
