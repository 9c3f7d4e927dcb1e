"""Exact rational scalars and the handful of combinatorial tables the
composition formulas need.

Rationals are ``fractions.Fraction``: already normalized to lowest terms
with a positive denominator, hashable, and exact under field operations.
This module adds the string form used by the JSON interfaces ("p" or
"p/q") plus checked binomial coefficients and falling-factorial
expansion rows.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "binomial",
    "falling_factorial_coeffs",
]


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (optionally signed) into an exact rational.

    Raises ValueError on anything else; in particular decimal floats are
    rejected so no silent precision loss can enter an exact pipeline.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if any(ch in s for ch in ".eE"):
        raise ValueError(f"not an exact rational literal: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}: {exc}") from None


def format_rational(q: Fraction) -> str:
    """Inverse of parse_rational: "p" for integers, else "p/q"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def binomial(n: int, s: int) -> int:
    """C(n, s) for 0 <= s <= n.

    Out-of-range s is an error here, not zero: the composition formulas
    divide by C(n, j), so a silent zero would hide an ambient-degree bug.
    """
    if n < 0:
        raise ValueError(f"binomial: negative n = {n}")
    if s < 0 or s > n:
        raise ValueError(f"binomial: index {s} outside 0..{n}")
    return math.comb(n, s)


def falling_factorial_coeffs(j: int) -> tuple[int, ...]:
    """Monomial coefficients (ascending) of x(x-1)...(x-j+1).

    j = 0 gives the empty product (1,).  Entries are the signed Stirling
    numbers of the first kind, but they are produced directly by
    expanding the product, not from a separate recurrence.
    """
    if j < 0:
        raise ValueError(f"falling_factorial_coeffs: negative j = {j}")
    coeffs = [1]
    for i in range(j):
        # multiply by (x - i)
        shifted = [0] + coeffs
        coeffs = [a - i * b for a, b in zip(shifted, coeffs + [0])]
    return tuple(coeffs)
