"""Exact polynomials in x for the geometric and Tanny-Dowling families."""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, List

from .arith import RationalLike, binomial, factorial, int_pow, to_rational
from .triangles import noncentral_whitney_row, stirling2_row, whitney

__all__ = [
    "Polynomial",
    "X",
    "eval_poly",
    "geometric_polynomial",
    "geometric_number",
    "noncentral_td",
    "tanny_dowling",
    "geometric_two_variable",
    "derivative_recurrence_step",
]


class Polynomial:
    """Dense univariate polynomial over the rationals, ``coeffs[k]`` of ``x**k``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._c = tuple(cs)

    @property
    def coeffs(self) -> List[Fraction]:
        return list(self._c) if self._c else [Fraction(0)]

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        if not self._c:
            return "Polynomial(0)"
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            terms.append(str(c) if k == 0 else f"{c}*x^{k}" if k > 1 else f"{c}*x")
        return "Polynomial(" + " + ".join(terms) + ")"

    def _lift(self, other) -> "Polynomial":
        return other if isinstance(other, Polynomial) else Polynomial([other])

    def __add__(self, other) -> "Polynomial":
        o = self._lift(other)
        n = max(len(self._c), len(o._c))
        return Polynomial(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._c)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        o = self._lift(other)
        if not self._c or not o._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> Fraction:
        return eval_poly(self, x)

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self._c) if k)

    def scale_argument(self, c: RationalLike) -> "Polynomial":
        """The polynomial ``p(c x)``."""
        c = to_rational(c)
        return Polynomial(int_pow(c, k) * a for k, a in enumerate(self._c))


X = Polynomial([0, 1])


def eval_poly(p: Polynomial, x: RationalLike) -> Fraction:
    """Horner evaluation."""
    x = to_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


@functools.lru_cache(maxsize=None)
def geometric_polynomial(n: int) -> Polynomial:
    """w_n(x) = sum_k k! S(n, k) x^k."""
    return Polynomial(factorial(k) * s for k, s in enumerate(stirling2_row(n)))


def geometric_number(n: int) -> Fraction:
    """Ordered Bell (Fubini) number w_n(1)."""
    return eval_poly(geometric_polynomial(n), 1)


@functools.lru_cache(maxsize=None)
def _noncentral_td(m: Fraction, a: Fraction, n: int) -> Polynomial:
    row = noncentral_whitney_row(m, a, n)
    return Polynomial(factorial(k) * w for k, w in enumerate(row))


def noncentral_td(m: RationalLike, a: RationalLike, n: int) -> Polynomial:
    """Noncentral Tanny-Dowling polynomial sum_k k! W~_{m,a}(n, k) x^k."""
    m, a = to_rational(m), to_rational(a)
    if m == 0:
        raise ValueError("m must be nonzero")
    return _noncentral_td(m, a, n)


@functools.lru_cache(maxsize=None)
def _tanny_dowling(variant: int, m: Fraction, n: int) -> Polynomial:
    if variant == 1:
        return Polynomial(int_pow(m, k) * factorial(k) * whitney(m, n, k) for k in range(n + 1))
    return Polynomial(factorial(k) * whitney(m, n, k) for k in range(n + 1))


def tanny_dowling(variant: int, m: RationalLike, n: int) -> Polynomial:
    """F_{m,1}(n; x) (variant 1) or F_{m,2}(n; x) (variant 2)."""
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    m = to_rational(m)
    if m == 0:
        raise ValueError("m must be nonzero")
    return _tanny_dowling(variant, m, n)


@functools.lru_cache(maxsize=None)
def _geometric_two_variable(r: Fraction, n: int) -> Polynomial:
    # coefficient of z^n/n! in exp(r z) * sum_k w_k(x) z^k/k!
    acc = Polynomial()
    for k in range(n + 1):
        acc = acc + geometric_polynomial(k) * (binomial(n, k) * int_pow(r, n - k))
    return acc


def geometric_two_variable(r: RationalLike, n: int) -> Polynomial:
    """w_n(r; x), the binomial convolution of exp(r z) with the w_k(x) EGF."""
    return _geometric_two_variable(to_rational(r), n)


def derivative_recurrence_step(p: Polynomial) -> Polynomial:
    """x * d/dx [(1 + x) p(x)]; maps w_n to w_{n+1}."""
    return X * ((1 + X) * p).derivative()
