"""Exact arithmetic shared by every other module.

Integers are plain Python ints (arbitrary precision, so nothing here can
overflow); rationals are `fractions.Fraction`, which is normalized at
construction: always reduced, denominator strictly positive.  The two
aliases below exist so that signatures elsewhere can say what they mean.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

ExactInt = int
ExactRat = Fraction

_INT_RE = re.compile(r"[+-]?\d+\Z")


def factorial(n: int) -> int:
    """n! as an exact integer, by plain iterated product (0! = 1)."""
    if n < 0:
        raise ValueError(f"factorial is undefined for negative n (got {n})")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor.  gcd(0, 0) is rejected."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def parse_int(text: str) -> int:
    """Parse a decimal integer string (optional sign, digits only)."""
    text = text.strip()
    if not _INT_RE.match(text):
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def format_int(n: int) -> str:
    return str(n)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer) into a reduced Fraction."""
    text = text.strip()
    num, sep, den = text.partition("/")
    if sep:
        return Fraction(parse_int(num), parse_int(den))
    return Fraction(parse_int(text))


def format_rational(q: Fraction) -> str:
    """Render as "p/q", or just "p" when the value is an integer."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
