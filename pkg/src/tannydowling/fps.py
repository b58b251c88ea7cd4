"""Truncated formal power series with exact rational coefficients.

Coefficients are stored as ordinary coefficients of ``z**k``; the EGF value
``a_n = n! * coeffs[n]`` is obtained with :func:`egf_values`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List

from .arith import RationalLike, factorial, to_rational

__all__ = [
    "TruncatedSeries",
    "exp_linear",
    "mul",
    "reciprocal",
    "egf_values",
    "ftilde_egf",
    "geometric_egf",
    "tanny_dowling_egf",
    "two_variable_geometric_egf",
]


class TruncatedSeries:
    """Power series known modulo ``z**(order+1)``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [to_rational(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> List[Fraction]:
        return list(self._coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self._coeffs]})"

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(self._coeffs[k] + other._coeffs[k] for k in range(n + 1))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self._coeffs)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        c = to_rational(other)
        return TruncatedSeries(c * a for a in self._coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return mul(self, reciprocal(other))
        return self * (1 / to_rational(other))

    def __rtruediv__(self, other) -> "TruncatedSeries":
        return mul(self._coerce(other), reciprocal(self))


def exp_linear(c: RationalLike, order: int) -> TruncatedSeries:
    """Series of ``exp(c*z)``."""
    c = to_rational(c)
    coeffs = []
    term = Fraction(1)
    for k in range(order + 1):
        if k:
            term = term * c / k
        coeffs.append(term)
    return TruncatedSeries(coeffs)


def mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(s.order, t.order)
    a, b = s.coeffs, t.coeffs
    return TruncatedSeries(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1))


def reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be nonzero."""
    a = s.coeffs
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term has no reciprocal")
    inv0 = 1 / a[0]
    out = [inv0]
    for k in range(1, len(a)):
        acc = sum((a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out.append(-acc * inv0)
    return TruncatedSeries(out)


def egf_values(s: TruncatedSeries) -> List[Fraction]:
    return [factorial(n) * c for n, c in enumerate(s.coeffs)]


def _geometric_kernel(scale: Fraction, m: Fraction, order: int) -> TruncatedSeries:
    # 1 / (1 - scale*(exp(m z) - 1))
    return reciprocal(1 - scale * (exp_linear(m, order) - 1))


def ftilde_egf(m: RationalLike, a: RationalLike, x: RationalLike, order: int) -> List[Fraction]:
    """EGF values of ``m exp(-a z) / (m - x (exp(m z) - 1))`` for n = 0..order."""
    m, a, x = to_rational(m), to_rational(a), to_rational(x)
    if m == 0:
        raise ValueError("m must be nonzero")
    denom = m - x * (exp_linear(m, order) - 1)
    return egf_values(m * exp_linear(-a, order) * reciprocal(denom))


def geometric_egf(x: RationalLike, order: int) -> List[Fraction]:
    """EGF values of ``1 / (1 - x (exp(z) - 1))``, i.e. w_n(x)."""
    return egf_values(_geometric_kernel(to_rational(x), Fraction(1), order))


def two_variable_geometric_egf(r: RationalLike, x: RationalLike, order: int) -> List[Fraction]:
    """EGF values of ``exp(r z) / (1 - x (exp(z) - 1))``, i.e. w_n(r; x)."""
    kernel = _geometric_kernel(to_rational(x), Fraction(1), order)
    return egf_values(exp_linear(r, order) * kernel)


def tanny_dowling_egf(variant: int, m: RationalLike, x: RationalLike, order: int) -> List[Fraction]:
    """EGF values of ``exp(z) / (1 - x (exp(mz) - 1))`` (variant 1) or
    ``exp(z) / (1 - (x/m)(exp(mz) - 1))`` (variant 2)."""
    m, x = to_rational(m), to_rational(x)
    if m == 0:
        raise ValueError("m must be nonzero")
    if variant == 1:
        scale = x
    elif variant == 2:
        scale = x / m
    else:
        raise ValueError("variant must be 1 or 2")
    return egf_values(exp_linear(1, order) * _geometric_kernel(scale, m, order))

