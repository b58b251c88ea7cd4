"""Exact scalar arithmetic shared by every other module.

Integers are Python ints and rationals are :class:`fractions.Fraction`,
which is already normalized (positive denominator, reduced) and exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "RationalLike",
    "binomial",
    "factorial",
    "int_pow",
    "to_rational",
    "parse_rational",
    "format_rational",
]

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def int_pow(b: RationalLike, e: int) -> Fraction:
    """Exact power ``b**e`` with the convention ``0**0 == 1``.

    Raises ZeroDivisionError for a zero base with a negative exponent.
    """
    b = to_rational(b)
    if e == 0:
        return Fraction(1)
    if b == 0 and e < 0:
        raise ZeroDivisionError("zero base with negative exponent")
    return b ** e


def to_rational(v: RationalLike) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a rational")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return parse_rational(v)
    raise TypeError(f"cannot convert {type(v).__name__} to an exact rational")


def parse_rational(s: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an exact decimal literal such as ``"1e-20"``.

    Decimal literals are converted exactly (``"0.1"`` is 1/10); no float is
    ever produced.
    """
    text = s.strip().replace("−", "-")
    if not text:
        raise ValueError("empty rational literal")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal {s!r}") from exc


def format_rational(q: RationalLike) -> str:
    """Inverse of :func:`parse_rational`: ``"p/q"`` or ``"p"`` for integers."""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
