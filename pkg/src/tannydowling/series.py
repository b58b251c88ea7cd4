"""Rigorous rational enclosures for

    F~_{m,a}(n; x) = m/(m+x) * sum_{k>=0} q^k (m k - a)^n,   q = x/(m+x).

The partial sum is exact.  Once the term ratio
``|q| ((m(k+1)-a)/(mk-a))^n`` has dropped to ``rho = (1+|q|)/2`` (it is
decreasing in k as soon as ``mk - a > 0``), every later term is at most
``rho`` times its predecessor, so the tail after term K is bounded by
``|t_K| rho/(1-rho)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import RationalLike, binomial, factorial, int_pow, to_rational
from .triangles import stirling2

__all__ = [
    "Enclosure",
    "ConvergenceError",
    "SeriesNotConverged",
    "check_convergence",
    "ftilde_series",
    "geometric_series_value",
    "series_sum_exact",
    "power_sum",
]


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction
    terms_used: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty enclosure")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, v) -> bool:
        return self.lo <= to_rational(v) <= self.hi


class ConvergenceError(ValueError):
    """Parameters outside the region where the series converges."""


class SeriesNotConverged(RuntimeError):
    """``max_terms`` ran out before the enclosure was narrow enough.

    ``partial_sum`` is the exact sum of the terms examined; ``enclosure`` is the
    last certified enclosure, or None if no tail bound could be certified yet.
    """

    def __init__(self, msg: str, partial_sum: Fraction, enclosure: Optional[Enclosure]):
        super().__init__(msg)
        self.partial_sum = partial_sum
        self.enclosure = enclosure


def check_convergence(m: Fraction, x: Fraction) -> Fraction:
    """Return q = x/(m+x) after checking m > 0 and |q| < 1."""
    if m <= 0:
        raise ConvergenceError("series requires m > 0")
    if m + x == 0:
        raise ConvergenceError("series requires |x/(m+x)| < 1 (x = -m)")
    q = x / (m + x)
    if abs(q) >= 1:
        raise ConvergenceError(f"series requires |x/(m+x)| < 1, got |q| = {abs(q)}")
    return q


def ftilde_series(
    m: RationalLike,
    a: RationalLike,
    n: int,
    x: RationalLike,
    eps: RationalLike = Fraction(1, 10**20),
    max_terms: int = 10_000,
) -> Enclosure:
    """Enclose the series value to width at most ``eps``."""
    m, a, x, eps = (to_rational(v) for v in (m, a, x, eps))
    if eps <= 0:
        raise ValueError("eps must be positive")
    q = check_convergence(m, x)
    absq = abs(q)
    rho = (1 + absq) / 2
    pref = m / (m + x)

    partial = Fraction(0)
    qk = Fraction(1)
    last: Optional[Enclosure] = None
    for k in range(max_terms):
        base = m * k - a
        term = pref * qk * int_pow(base, n)
        partial += term
        used = k + 1
        if q == 0:
            return Enclosure(partial, partial, used)
        if base > 0:
            ratio = absq * ((base + m) / base) ** n
            if ratio <= rho:
                bound = abs(term) * rho / (1 - rho)
                last = Enclosure(partial - bound, partial + bound, used)
                if 2 * bound <= eps:
                    return last
        qk *= q
    raise SeriesNotConverged(
        f"no enclosure of width <= {eps} within {max_terms} terms", partial, last
    )


def geometric_series_value(n: int, x: RationalLike, eps: RationalLike = Fraction(1, 10**20),
                           max_terms: int = 10_000) -> Enclosure:
    """w_n(x) = 1/(x+1) sum_k (x/(x+1))^k k^n; x = 1 gives sum_k k^n / 2^(k+1)."""
    return ftilde_series(1, 0, n, x, eps, max_terms)


def power_sum(i: int, q: RationalLike) -> Fraction:
    """Exact ``sum_{k>=0} k^i q^k`` for |q| < 1.

    Uses ``sum_j j! S(i,j) q^j / (1-q)^(j+1)``.
    """
    q = to_rational(q)
    if abs(q) >= 1:
        raise ConvergenceError("power sum requires |q| < 1")
    return sum(
        (factorial(j) * stirling2(i, j) * int_pow(q, j) / int_pow(1 - q, j + 1) for j in range(i + 1)),
        Fraction(0),
    )


def series_sum_exact(m: RationalLike, a: RationalLike, n: int, x: RationalLike) -> Fraction:
    """Exact value of ``m/(m+x) * sum_k q^k (m k - a)^n`` with q = x/(m+x).

    The infinite sum is resolved in closed
    form by expanding (mk - a)^n binomially and summing each
    ``sum_k k^i q^k`` as a rational function of q; convergence is checked first.
    """
    m, a, x = to_rational(m), to_rational(a), to_rational(x)
    q = check_convergence(m, x)
    total = Fraction(0)
    for i in range(n + 1):
        total += binomial(n, i) * int_pow(m, i) * int_pow(-a, n - i) * power_sum(i, q)
    return m / (m + x) * total
