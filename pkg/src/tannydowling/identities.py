"""Catalog of identities for the geometric / Tanny-Dowling families.

Every entry is checked pointwise in exact arithmetic.  Each identity has an
``as-printed`` form; entries flagged ``erratum`` also carry a ``corrected``
form.  The printed form of an erratum entry is expected to hold when m = 1 and
is allowed (and expected somewhere) to fail for m != 1: the printed text drops
the factor m**n that links F~_{m,0}(n; x) to w_n(x/m).

All checks are written with denominators cleared, so evaluating a side never
divides by a parameter expression; the singular points of the original
displays are skipped with a reason instead.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .arith import binomial, factorial, format_rational, int_pow, to_rational
from .fps import ftilde_egf, geometric_egf, tanny_dowling_egf, two_variable_geometric_egf
from .polynomials import (
    derivative_recurrence_step,
    eval_poly,
    geometric_polynomial,
    geometric_two_variable,
    noncentral_td,
    Polynomial,
    tanny_dowling,
)
from .series import ConvergenceError, check_convergence, power_sum, series_sum_exact
from .triangles import (
    noncentral_whitney,
    noncentral_whitney_sum,
    stirling2,
    translated_whitney,
    translated_whitney_explicit,
)

__all__ = [
    "AS_PRINTED",
    "CORRECTED",
    "VARIANTS",
    "IdentityParams",
    "IdentityReport",
    "Identity",
    "CATALOG",
    "ERRATUM_TAGS",
    "Grid",
    "SuiteSummary",
    "UnknownIdentity",
    "check_identity",
    "expand_grid",
    "run_suite",
]

AS_PRINTED = "as-printed"
CORRECTED = "corrected"
VARIANTS = (AS_PRINTED, CORRECTED)

HOLDS, FAILS, SKIPPED = "holds", "fails", "skipped"

PARAM_ORDER = ("m", "a", "a1", "a2", "r", "x", "x1", "x2", "n", "k")


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class IdentityParams:
    n: int = 0
    m: Optional[Fraction] = None
    a: Optional[Fraction] = None
    a1: Optional[Fraction] = None
    a2: Optional[Fraction] = None
    r: Optional[Fraction] = None
    x: Optional[Fraction] = None
    x1: Optional[Fraction] = None
    x2: Optional[Fraction] = None
    k: Optional[int] = None

    @classmethod
    def make(cls, **kw) -> "IdentityParams":
        out = {}
        for name, v in kw.items():
            if v is None:
                continue
            out[name] = int(v) if name in ("n", "k") else to_rational(v)
        return cls(**out)

    def items(self) -> List[Tuple[str, object]]:
        return [(name, getattr(self, name)) for name in PARAM_ORDER if getattr(self, name) is not None]

    def to_json(self) -> Dict[str, object]:
        return {name: (v if name in ("n", "k") else format_rational(v)) for name, v in self.items()}

    def sort_key(self) -> Tuple:
        return tuple(self.items())


@dataclass(frozen=True)
class IdentityReport:
    id: str
    variant: str
    params: IdentityParams
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    verdict: str
    skip_reason: str = ""

    def to_json(self) -> Dict[str, object]:
        return {
            "id": self.id,
            "variant": self.variant,
            "params": self.params.to_json(),
            "lhs": None if self.lhs is None else format_rational(self.lhs),
            "rhs": None if self.rhs is None else format_rational(self.rhs),
            "verdict": self.verdict,
            "skip_reason": self.skip_reason,
        }


Sides = Tuple[Fraction, Fraction]
SideFn = Callable[[IdentityParams], Sides]
Guard = Callable[[IdentityParams], Optional[str]]


@dataclass(frozen=True)
class Identity:
    """One catalog entry.

    ``params`` lists the parameters the identity consumes; a grid is expanded
    over exactly those.  ``guards`` apply to every variant, ``printed_guards``
    only to the as-printed form.
    """

    tag: str
    formula: str
    params: Tuple[str, ...]
    printed: SideFn
    corrected: Optional[SideFn] = None
    erratum: bool = False
    guards: Tuple[Guard, ...] = ()
    printed_guards: Tuple[Guard, ...] = ()

    @property
    def variants(self) -> Tuple[str, ...]:
        return VARIANTS if self.corrected is not None else (AS_PRINTED,)


# ---------------------------------------------------------------------------
# cached evaluations

@functools.lru_cache(maxsize=None)
def _ft(m: Fraction, a: Fraction, n: int, x: Fraction) -> Fraction:
    return eval_poly(noncentral_td(m, a, n), x)


def F(m, a, n: int, x) -> Fraction:
    """F~_{m,a}(n; x) from the defining sum over noncentral Whitney numbers."""
    return _ft(to_rational(m), to_rational(a), n, to_rational(x))


@functools.lru_cache(maxsize=None)
def _w(n: int, y: Fraction) -> Fraction:
    return eval_poly(geometric_polynomial(n), y)


def w(n: int, y) -> Fraction:
    return _w(n, to_rational(y))


def _egf_order(n: int) -> int:
    return max(12, n)


@functools.lru_cache(maxsize=None)
def _ftilde_egf(m: Fraction, a: Fraction, x: Fraction, order: int) -> Tuple[Fraction, ...]:
    return tuple(ftilde_egf(m, a, x, order))


@functools.lru_cache(maxsize=None)
def _derivative_chain(n: int):
    if n == 0:
        return Polynomial([1])
    return derivative_recurrence_step(_derivative_chain(n - 1))


def _pz(n: int) -> Fraction:
    """0**n with 0**0 = 1."""
    return int_pow(0, n)


# ---------------------------------------------------------------------------
# guards

def _min_n(lo: int) -> Guard:
    def g(p: IdentityParams) -> Optional[str]:
        return f"requires n >= {lo}" if p.n < lo else None
    return g


def _x_not(expr: Callable[[IdentityParams], Fraction], label: str) -> Guard:
    def g(p: IdentityParams) -> Optional[str]:
        return f"singular point {label}" if p.x == expr(p) else None
    return g


def _m_nonzero(p: IdentityParams) -> Optional[str]:
    if p.m is not None and p.m == 0:
        return "requires m != 0"
    return None


def _distinct_x(p: IdentityParams) -> Optional[str]:
    return "requires x1 != x2" if p.x1 == p.x2 else None


def _k_le_n(p: IdentityParams) -> Optional[str]:
    return "requires k <= n" if p.k is not None and p.k > p.n else None


def _converges(m_of: Callable[[IdentityParams], Fraction]) -> Guard:
    def g(p: IdentityParams) -> Optional[str]:
        try:
            check_convergence(m_of(p), p.x)
        except ConvergenceError as exc:
            return str(exc)
        return None
    return g


_x_ne_minus_m = _x_not(lambda p: -p.m, "x = -m")
_x_ne_minus_half_m = _x_not(lambda p: -p.m / 2, "x = -m/2")


# ---------------------------------------------------------------------------
# identity sides

def _w_egf(p):
    return w(p.n, p.x), geometric_egf(p.x, p.n)[p.n]


def _w_deriv_rec(p):
    return eval_poly(_derivative_chain(p.n), p.x), w(p.n, p.x)


def _f1_egf(p):
    return eval_poly(tanny_dowling(1, p.m, p.n), p.x), tanny_dowling_egf(1, p.m, p.x, p.n)[p.n]


def _f2_egf(p):
    return eval_poly(tanny_dowling(2, p.m, p.n), p.x), tanny_dowling_egf(2, p.m, p.x, p.n)[p.n]


def _td_equiv(p):
    return eval_poly(tanny_dowling(1, p.m, p.n), p.x), eval_poly(tanny_dowling(2, p.m, p.n), p.m * p.x)


def _ft_egf(p):
    return F(p.m, p.a, p.n, p.x), _ftilde_egf(p.m, p.a, p.x, _egf_order(p.n))[p.n]


def _spec_a0(p):
    return F(p.m, 0, p.n, p.x), w(p.n, p.x / p.m)


def _spec_a0_fix(p):
    return F(p.m, 0, p.n, p.x), int_pow(p.m, p.n) * w(p.n, p.x / p.m)


def _spec_am1(p):
    return F(p.m, -1, p.n, p.x), eval_poly(tanny_dowling(2, p.m, p.n), p.x)


def _spec_1mr(p):
    return F(1, -p.r, p.n, p.x), two_variable_geometric_egf(p.r, p.x, p.n)[p.n]


def _thm1(p):
    m, a, n, x = p.m, p.a, p.n, p.x
    rhs = sum((binomial(n, k) * int_pow(m, k) * w(k, x / m) * int_pow(-a, n - k) for k in range(n + 1)), Fraction(0))
    return F(m, a, n, x), rhs


def _ncw_sum(p):
    return noncentral_whitney(p.m, p.a, p.n, p.k), noncentral_whitney_sum(p.m, p.a, p.n, p.k)


def _ncw_a0(p):
    return noncentral_whitney(p.m, 0, p.n, p.k), int_pow(p.m, p.n - p.k) * stirling2(p.n, p.k)


def _tw_rec(p):
    m, n, k = p.m, p.n, p.k

    def t(nn, kk):
        if kk < 0 or kk > nn:
            return Fraction(0)
        return int_pow(m, nn - kk) * stirling2(nn, kk)

    return t(n, k), t(n - 1, k - 1) + m * k * t(n - 1, k)


def _tw_explicit(p):
    return translated_whitney(p.m, p.n, p.k), translated_whitney_explicit(p.m, p.n, p.k)


def _kargin_e13(p):
    r, n, x = p.r, p.n, p.x
    rhs = sum((binomial(n, k) * w(k, x) * int_pow(r, n - k) for k in range(n + 1)), Fraction(0))
    return F(1, -r, n, x), rhs


def _thm2(p):
    m, a, n, x = p.m, p.a, p.n, p.x
    return x * F(m, a - m, n, x), (m + x) * F(m, a, n, x) - int_pow(-a, n) * m


def _kargin_e14(p):
    r, n, x = p.r, p.n, p.x
    lhs = x * eval_poly(geometric_two_variable(r + 1, n), x)
    return lhs, (1 + x) * eval_poly(geometric_two_variable(r, n), x) - int_pow(r, n)


def _spec_6th(p):
    m, n, x = p.m, p.n, p.x
    return x * F(m, -m, n, x), (m + x) * w(n, x / m)


def _spec_6th_fix(p):
    m, n, x = p.m, p.n, p.x
    return x * F(m, -m, n, x), (m + x) * int_pow(m, n) * w(n, x / m) - m * _pz(n)


def _spec_7th(p):
    m, n, x = p.m, p.n, p.x
    return (m + x) * F(m, m, n, x), x * w(n, x / m) - int_pow(-m, n + 1)


def _spec_7th_fix(p):
    m, n, x = p.m, p.n, p.x
    return (m + x) * F(m, m, n, x), x * int_pow(m, n) * w(n, x / m) - int_pow(-m, n + 1)


def _binsum(n: int, y: Fraction, alternating: bool = False) -> Fraction:
    return sum(
        (binomial(n, k) * (int_pow(-1, n - k) if alternating else 1) * w(k, y) for k in range(n + 1)),
        Fraction(0),
    )


def _spec_8th(p):
    m, n, x = p.m, p.n, p.x
    return x * int_pow(m, n) * _binsum(n, x / m), (m + x) * w(n, x / m)


def _spec_8th_fix(p):
    m, n, x = p.m, p.n, p.x
    return x * _binsum(n, x / m), (m + x) * w(n, x / m) - m * _pz(n)


def _spec_9th(p):
    m, n, x = p.m, p.n, p.x
    return (m + x) * int_pow(m, n) * _binsum(n, x / m, True), x * w(n, x / m) - int_pow(-m, n + 1)


def _spec_9th_fix(p):
    m, n, x = p.m, p.n, p.x
    return (m + x) * _binsum(n, x / m, True), x * w(n, x / m) + int_pow(-1, n) * m


def _dilkurt_1(p):
    return _binsum(p.n, Fraction(1)), 2 * w(p.n, 1)


def _dilkurt_2(p):
    n = p.n
    lhs = 2 * sum((binomial(n, k) * int_pow(-1, k) * w(k, 1) for k in range(n + 1)), Fraction(0))
    return lhs, int_pow(-1, n) * w(n, 1) + 1


def _thm3(p):
    m, a1, a2, n, x = p.m, p.a1, p.a2, p.n, p.x
    abar = a1 + a2 + m
    lhs = x * sum((binomial(n, k) * F(m, a1, k, x) * F(m, a2, n - k, x) for k in range(n + 1)), Fraction(0))
    return lhs, F(m, abar, n + 1, x) + abar * F(m, abar, n, x)


def _wconv(n: int, y1: Fraction, y2: Fraction) -> Fraction:
    return sum((binomial(n, k) * w(k, y1) * w(n - k, y2) for k in range(n + 1)), Fraction(0))


def _spec_11th(p):
    m, n, x = p.m, p.n, p.x
    y = x / m
    return (m + x) * _wconv(n, y, y), w(n + 1, y) + m * w(n, y)


def _spec_11th_fix(p):
    m, n, x = p.m, p.n, p.x
    y = x / m
    return (m + x) * _wconv(n, y, y), m * (w(n + 1, y) + w(n, y))


def _kargin1(p):
    n, x = p.n, p.x
    return (x + 1) * _wconv(n, x, x), w(n + 1, x) + w(n, x)


def _thm4(p):
    m, a1, a2, n, x1, x2 = p.m, p.a1, p.a2, p.n, p.x1, p.x2
    s = sum((binomial(n, k) * F(m, a1, k, x1) * F(m, a2, n - k, x2) for k in range(n + 1)), Fraction(0))
    return (x2 - x1) * s, x2 * F(m, a1 + a2, n, x2) - x1 * F(m, a1 + a2, n, x1)


def _spec_thm4_a0(p):
    m, n, x1, x2 = p.m, p.n, p.x1, p.x2
    return (x2 - x1) * _wconv(n, x1 / m, x2 / m), x2 * w(n, x2 / m) - x1 * w(n, x1 / m)


def _kargin2(p):
    n, x1, x2 = p.n, p.x1, p.x2
    return (x2 - x1) * _wconv(n, x1, x2), x2 * w(n, x2) - x1 * w(n, x1)


def _bininv_fwd(p):
    m, a, n, x = p.m, p.a, p.n, p.x
    rhs = sum(
        (int_pow(-1, n - j) * binomial(n, j) * int_pow(a, n - j) * int_pow(m, j) * w(j, x / m) for j in range(n + 1)),
        Fraction(0),
    )
    return F(m, a, n, x), rhs


def _bininv_inv(p):
    m, a, n, x = p.m, p.a, p.n, p.x
    rhs = sum((binomial(n, j) * int_pow(a, n - j) * F(m, a, j, x) for j in range(n + 1)), Fraction(0))
    return int_pow(m, n) * w(n, x / m), rhs


def _reflect(p):
    m, a, n, x = p.m, p.a, p.n, p.x
    return F(m, a, n, x - m), int_pow(-1, n) * F(m, -a - m, n, -x)


def _thm5(p):
    m, a, n, x = p.m, p.a, p.n, p.x
    s = sum(
        (int_pow(-1, n + k) * factorial(k) * noncentral_whitney(m, -a, n, k) * int_pow(m + x, k) for k in range(n + 1)),
        Fraction(0),
    )
    return (m + x) * F(m, a, n, x), x * s + int_pow(-a, n) * m


def _alt_stirling_sum(m: Fraction, n: int, x: Fraction, tw: Callable[[Fraction, int, int], Fraction]) -> Fraction:
    return x * sum(
        (int_pow(-1, n + k) * factorial(k) * tw(m, n, k) * int_pow(m + x, k) for k in range(n + 1)),
        Fraction(0),
    )


def _tw_closed(m, n, k):
    return int_pow(m, n - k) * stirling2(n, k)


def _spec_17th(p):
    m, n, x = p.m, p.n, p.x
    return (m + x) * w(n, x / m), _alt_stirling_sum(m, n, x, _tw_closed)


def _spec_17th_fix(p):
    m, n, x = p.m, p.n, p.x
    return (m + x) * int_pow(m, n) * w(n, x / m), _alt_stirling_sum(m, n, x, _tw_closed) + _pz(n) * m


def _spec_18th(p):
    m, n, x = p.m, p.n, p.x
    return (m + x) * w(n, x / m), _alt_stirling_sum(m, n, x, translated_whitney)


def _spec_18th_fix(p):
    m, n, x = p.m, p.n, p.x
    return (m + x) * int_pow(m, n) * w(n, x / m), _alt_stirling_sum(m, n, x, translated_whitney) + _pz(n) * m


def _kargin3(p):
    n, x = p.n, p.x
    s = sum((stirling2(n, k) * int_pow(-1, n + k) * factorial(k) * int_pow(x + 1, k) for k in range(1, n + 1)), Fraction(0))
    return (x + 1) * w(n, x), x * s


def _half_arg(p):
    m, a, n, x = p.m, p.a, p.n, p.x
    d = m + 2 * x
    lhs = d * F(m, 2 * a, n, x)
    rhs = int_pow(2, n + 1) * (m + x) * F(m, a, n, x * x / d) - m * F(m, 2 * a, n, -m * x / d)
    return lhs, rhs


def _doubling_sum(m, n, x, first: Callable[[int], Fraction], second: Callable[[int], Fraction]) -> Fraction:
    # sum_k k! x^k [2^(n+1)(m+x) x^k first(k) + (-m)^(k+1) second(k)] (m+2x)^(n-k)
    d = m + 2 * x
    return sum(
        (
            factorial(k) * int_pow(x, k)
            * (int_pow(2, n + 1) * (m + x) * int_pow(x, k) * first(k) + int_pow(-m, k + 1) * second(k))
            * int_pow(d, n - k)
            for k in range(n + 1)
        ),
        Fraction(0),
    )


def _thm6(p):
    m, a, n, x = p.m, p.a, p.n, p.x
    rhs = _doubling_sum(m, n, x, lambda k: noncentral_whitney(m, a, n, k), lambda k: noncentral_whitney(m, 2 * a, n, k))
    return int_pow(m + 2 * x, n + 1) * F(m, 2 * a, n, x), rhs


def _spec_20th_rhs(m, n, x):
    return _doubling_sum(m, n, x, lambda k: translated_whitney(m, n, k), lambda k: translated_whitney(m, n, k))


def _spec_20th(p):
    m, n, x = p.m, p.n, p.x
    return int_pow(m + 2 * x, n + 1) * w(n, x / m), _spec_20th_rhs(m, n, x)


def _spec_20th_fix(p):
    m, n, x = p.m, p.n, p.x
    return int_pow(m + 2 * x, n + 1) * int_pow(m, n) * w(n, x / m), _spec_20th_rhs(m, n, x)


def _kargin4(p):
    n, x = p.n, p.x
    rhs = _doubling_sum(Fraction(1), n, x, lambda k: stirling2(n, k), lambda k: stirling2(n, k))
    return int_pow(2 * x + 1, n + 1) * w(n, x), rhs


def _series_21(p):
    return F(p.m, p.a, p.n, p.x), series_sum_exact(p.m, p.a, p.n, p.x)


def _spec_22nd(p):
    m, n, x = p.m, p.n, p.x
    return w(n, x / m), int_pow(m, n + 1) / (m + x) * power_sum(n, x / (m + x))


def _spec_22nd_fix(p):
    m, n, x = p.m, p.n, p.x
    return w(n, x / m), m / (m + x) * power_sum(n, x / (m + x))


def _series_23(p):
    n, x = p.n, p.x
    return w(n, x), power_sum(n, x / (x + 1)) / (x + 1)


def _series_24(p):
    return w(p.n, 1), power_sum(p.n, Fraction(1, 2)) / 2


# ---------------------------------------------------------------------------
# catalog

_MNX = ("m", "n", "x")
_MANX = ("m", "a", "n", "x")

_ENTRIES: Sequence[Identity] = (
    Identity("W_EGF", "EGF of 1/(1 - x(e^z - 1)) gives w_n(x)", ("n", "x"), _w_egf),
    Identity("W_DERIV_REC", "w_{n+1}(x) = x d/dx[(1 + x) w_n(x)], iterated from w_0 = 1", ("n", "x"), _w_deriv_rec),
    Identity("F1_EGF", "EGF of e^z/(1 - x(e^{mz} - 1)) gives F_{m,1}(n;x)", _MNX, _f1_egf),
    Identity("F2_EGF", "EGF of e^z/(1 - (x/m)(e^{mz} - 1)) gives F_{m,2}(n;x)", _MNX, _f2_egf),
    Identity("TD_EQUIV", "F_{m,1}(n;x) = F_{m,2}(n;mx)", _MNX, _td_equiv),
    Identity("FT_EGF", "EGF of m e^{-az}/(m - x(e^{mz} - 1)) gives F~_{m,a}(n;x)", _MANX, _ft_egf),
    Identity(
        "SPEC_A0", "F~_{m,0}(n;x) = w_n(x/m)   [corrected: m^n w_n(x/m)]", _MNX,
        _spec_a0, _spec_a0_fix, erratum=True,
    ),
    Identity("SPEC_AM1", "F~_{m,-1}(n;x) = F_{m,2}(n;x)", _MNX, _spec_am1),
    Identity("SPEC_1MR", "F~_{1,-r}(n;x) = w_n(r;x) (EGF e^{rz}/(1 - x(e^z - 1)))", ("r", "n", "x"), _spec_1mr),
    Identity("NCW_SUM", "W~ recurrence = sum_j C(n,j)(-a)^{n-j} m^{j-k} S(j,k)", ("m", "a", "n", "k"), _ncw_sum,
             guards=(_k_le_n,)),
    Identity("NCW_A0", "W~_{m,0}(n,k) = m^{n-k} S(n,k)", ("m", "n", "k"), _ncw_a0, guards=(_k_le_n,)),
    Identity("THM1", "F~_{m,a}(n;x) = sum_k C(n,k) m^k w_k(x/m) (-a)^{n-k}", _MANX, _thm1),
    Identity("KARGIN_E13", "F~_{1,-r}(n;x) = sum_k C(n,k) w_k(x) r^{n-k}", ("r", "n", "x"), _kargin_e13),
    Identity("THM2", "x F~_{m,a-m}(n;x) = (m+x) F~_{m,a}(n;x) - (-a)^n m", _MANX, _thm2),
    Identity("KARGIN_E14", "x w_n(r+1;x) = (1+x) w_n(r;x) - r^n", ("r", "n", "x"), _kargin_e14),
    Identity(
        "SPEC_6TH", "x F~_{m,-m}(n;x) = (m+x) w_n(x/m)   [corrected: (m+x) m^n w_n(x/m) - m 0^n]", _MNX,
        _spec_6th, _spec_6th_fix, erratum=True, printed_guards=(_min_n(1),),
    ),
    Identity(
        "SPEC_7TH", "(m+x) F~_{m,m}(n;x) = x w_n(x/m) - (-m)^{n+1}   [corrected: x m^n w_n(x/m)]", _MNX,
        _spec_7th, _spec_7th_fix, erratum=True,
    ),
    Identity(
        "SPEC_8TH", "x m^n sum_k C(n,k) w_k(x/m) = (m+x) w_n(x/m)   [corrected: drop m^n, subtract m 0^n]", _MNX,
        _spec_8th, _spec_8th_fix, erratum=True, printed_guards=(_min_n(1),),
    ),
    Identity(
        "SPEC_9TH",
        "(m+x) m^n sum_k C(n,k)(-1)^{n-k} w_k(x/m) = x w_n(x/m) - (-m)^{n+1}   [corrected: drop m^n, + (-1)^n m]",
        _MNX, _spec_9th, _spec_9th_fix, erratum=True,
    ),
    Identity("DILKURT_1", "sum_k C(n,k) w_k = 2 w_n", ("n",), _dilkurt_1, guards=(_min_n(1),)),
    Identity("DILKURT_2", "2 sum_k C(n,k) (-1)^k w_k = (-1)^n w_n + 1", ("n",), _dilkurt_2),
    Identity(
        "THM3", "x sum_k C(n,k) F~_{m,a1}(k;x) F~_{m,a2}(n-k;x) = F~_{m,A}(n+1;x) + A F~_{m,A}(n;x), A = a1+a2+m",
        ("m", "a1", "a2", "n", "x"), _thm3,
    ),
    Identity(
        "SPEC_11TH",
        "(m+x) sum_k C(n,k) w_k(x/m) w_{n-k}(x/m) = w_{n+1}(x/m) + m w_n(x/m)   [corrected: m (w_{n+1} + w_n)]",
        _MNX, _spec_11th, _spec_11th_fix, erratum=True,
    ),
    Identity("KARGIN1", "(x+1) sum_k C(n,k) w_k(x) w_{n-k}(x) = w_{n+1}(x) + w_n(x)", ("n", "x"), _kargin1),
    Identity(
        "THM4",
        "(x2-x1) sum_k C(n,k) F~_{m,a1}(k;x1) F~_{m,a2}(n-k;x2) = x2 F~_{m,a1+a2}(n;x2) - x1 F~_{m,a1+a2}(n;x1)",
        ("m", "a1", "a2", "n", "x1", "x2"), _thm4, guards=(_distinct_x,),
    ),
    Identity(
        "SPEC_THM4_A0", "(x2-x1) sum_k C(n,k) w_k(x1/m) w_{n-k}(x2/m) = x2 w_n(x2/m) - x1 w_n(x1/m)",
        ("m", "n", "x1", "x2"), _spec_thm4_a0, guards=(_distinct_x,),
    ),
    Identity(
        "KARGIN2", "(x2-x1) sum_k C(n,k) w_k(x1) w_{n-k}(x2) = x2 w_n(x2) - x1 w_n(x1)",
        ("n", "x1", "x2"), _kargin2, guards=(_distinct_x,),
    ),
    Identity("BININV_FWD", "F~_{m,a}(n;x) = sum_j (-1)^{n-j} C(n,j) a^{n-j} m^j w_j(x/m)", _MANX, _bininv_fwd),
    Identity("BININV_INV", "m^n w_n(x/m) = sum_j C(n,j) a^{n-j} F~_{m,a}(j;x)", _MANX, _bininv_inv),
    Identity("REFLECT", "F~_{m,a}(n;x-m) = (-1)^n F~_{m,-a-m}(n;-x)", _MANX, _reflect),
    Identity(
        "THM5", "(m+x) F~_{m,a}(n;x) = x sum_k (-1)^{n+k} k! W~_{m,-a}(n,k) (m+x)^k + (-a)^n m", _MANX, _thm5,
        guards=(_x_ne_minus_m,),
    ),
    Identity(
        "SPEC_17TH", "(m+x) w_n(x/m) = x sum_k (-1)^{n+k} k! m^{n-k} S(n,k) (m+x)^k   [corrected: m^n on the left]",
        _MNX, _spec_17th, _spec_17th_fix, erratum=True, guards=(_x_ne_minus_m,), printed_guards=(_min_n(1),),
    ),
    Identity(
        "SPEC_18TH", "(m+x) w_n(x/m) = x sum_k (-1)^{n+k} k! S^(m)(n,k) (m+x)^k   [corrected: m^n on the left]",
        _MNX, _spec_18th, _spec_18th_fix, erratum=True, guards=(_x_ne_minus_m,), printed_guards=(_min_n(1),),
    ),
    Identity(
        "KARGIN3", "(x+1) w_n(x) = x sum_{k>=1} S(n,k) (-1)^{n+k} k! (x+1)^k", ("n", "x"), _kargin3,
        guards=(_min_n(1), _x_not(lambda p: Fraction(-1), "x = -1")),
    ),
    Identity("TW_REC", "S^(m)(n,k) = S^(m)(n-1,k-1) + m k S^(m)(n-1,k)", ("m", "n", "k"), _tw_rec,
             guards=(_min_n(1), _k_le_n)),
    Identity("TW_EXPLICIT", "S^(m)(n,k) = (1/(m^k k!)) sum_j (-1)^{k-j} C(k,j) (mj)^n", ("m", "n", "k"), _tw_explicit,
             guards=(_k_le_n,)),
    Identity(
        "HALF_ARG",
        "(m+2x) F~_{m,2a}(n;x) = 2^{n+1}(m+x) F~_{m,a}(n;x^2/(m+2x)) - m F~_{m,2a}(n;-mx/(m+2x))",
        _MANX, _half_arg, guards=(_x_ne_minus_half_m,),
    ),
    Identity(
        "THM6",
        "(m+2x)^{n+1} F~_{m,2a}(n;x) = sum_k k! x^k [2^{n+1}(m+x) x^k W~_{m,a}(n,k) + (-m)^{k+1} W~_{m,2a}(n,k)]"
        " (m+2x)^{n-k}",
        _MANX, _thm6, guards=(_x_ne_minus_half_m,),
    ),
    Identity(
        "SPEC_20TH",
        "(m+2x)^{n+1} w_n(x/m) = sum_k k! x^k S^(m)(n,k) [2^{n+1}(m+x) x^k + (-m)^{k+1}] (m+2x)^{n-k}"
        "   [corrected: m^n on the left]",
        _MNX, _spec_20th, _spec_20th_fix, erratum=True, guards=(_x_ne_minus_half_m,),
    ),
    Identity(
        "KARGIN4",
        "(2x+1)^{n+1} w_n(x) = sum_k S(n,k) k! x^k [2^{n+1}(x+1) x^k + (-1)^{k+1}] (2x+1)^{n-k}",
        ("n", "x"), _kargin4, guards=(_x_not(lambda p: Fraction(-1, 2), "x = -1/2"),),
    ),
    Identity(
        "SERIES_21", "F~_{m,a}(n;x) = m/(m+x) sum_k (x/(m+x))^k (mk-a)^n", _MANX, _series_21,
        guards=(_converges(lambda p: p.m),),
    ),
    Identity(
        "SPEC_22ND", "w_n(x/m) = m^{n+1}/(m+x) sum_k (x/(m+x))^k k^n   [corrected: prefactor m/(m+x)]",
        _MNX, _spec_22nd, _spec_22nd_fix, erratum=True, guards=(_converges(lambda p: p.m),),
    ),
    Identity(
        "SERIES_23", "w_n(x) = 1/(x+1) sum_k (x/(x+1))^k k^n", ("n", "x"), _series_23,
        guards=(_converges(lambda p: Fraction(1)),),
    ),
    Identity("SERIES_24", "w_n = sum_k k^n / 2^{k+1}", ("n",), _series_24),
)

CATALOG: Dict[str, Identity] = {e.tag: e for e in _ENTRIES}
ERRATUM_TAGS: Tuple[str, ...] = tuple(e.tag for e in _ENTRIES if e.erratum)


def get_identity(tag: str) -> Identity:
    try:
        return CATALOG[tag]
    except KeyError:
        raise UnknownIdentity(tag) from None


def check_identity(tag: str, params: IdentityParams, variant: str = AS_PRINTED) -> IdentityReport:
    ident = get_identity(tag)
    if variant not in ident.variants:
        raise ValueError(f"{tag} has no {variant!r} variant (available: {', '.join(ident.variants)})")
    missing = [name for name in ident.params if getattr(params, name) is None]
    if missing:
        raise ValueError(f"{tag} needs parameters {missing}")

    guards = (_m_nonzero,) + ident.guards + (ident.printed_guards if variant == AS_PRINTED else ())
    for g in guards:
        reason = g(params)
        if reason:
            return IdentityReport(tag, variant, params, None, None, SKIPPED, reason)

    sides = ident.printed if variant == AS_PRINTED else ident.corrected
    lhs, rhs = sides(params)
    lhs, rhs = to_rational(lhs), to_rational(rhs)
    return IdentityReport(tag, variant, params, lhs, rhs, HOLDS if lhs == rhs else FAILS)


# ---------------------------------------------------------------------------
# sweeps

def _frac_tuple(vals: Iterable) -> Tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in vals)


@dataclass(frozen=True)
class Grid:
    m_set: Tuple[Fraction, ...] = _frac_tuple((1, 2, 3))
    a_set: Tuple[Fraction, ...] = _frac_tuple((-2, -1, 0, 1, 2))
    n_max: int = 10
    x_set: Tuple[Fraction, ...] = _frac_tuple(("-1/2", "1/2", 1, 2, "5/3"))

    @classmethod
    def make(cls, m_set=None, a_set=None, n_max=None, x_set=None) -> "Grid":
        d = cls()
        return cls(
            _frac_tuple(m_set) if m_set is not None else d.m_set,
            _frac_tuple(a_set) if a_set is not None else d.a_set,
            d.n_max if n_max is None else int(n_max),
            _frac_tuple(x_set) if x_set is not None else d.x_set,
        )


def expand_grid(ident: Identity, grid: Grid) -> List[IdentityParams]:
    """All parameter points for ``ident`` drawn from ``grid`` (k ranges over 0..n)."""
    source = {
        "m": grid.m_set, "a": grid.a_set, "a1": grid.a_set, "a2": grid.a_set, "r": grid.a_set,
        "x": grid.x_set, "x1": grid.x_set, "x2": grid.x_set,
        "n": tuple(range(grid.n_max + 1)),
    }
    names = [p for p in ident.params if p != "k"]
    out = []
    for combo in itertools.product(*(source[p] for p in names)):
        kw = dict(zip(names, combo))
        if "k" in ident.params:
            for k in range(kw["n"] + 1):
                out.append(IdentityParams.make(k=k, **kw))
        else:
            out.append(IdentityParams.make(**kw))
    return out


@dataclass
class SuiteSummary:
    reports: List[IdentityReport]
    counts: Dict[Tuple[str, str], Counter] = field(default_factory=dict)
    unexpected: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unexpected

    def lines(self) -> List[str]:
        out = []
        for (tag, variant), c in sorted(self.counts.items()):
            note = "  (erratum candidate)" if CATALOG[tag].erratum and variant == AS_PRINTED else ""
            out.append(
                f"{tag:<14} {variant:<10} holds={c[HOLDS]:<6} fails={c[FAILS]:<6} skipped={c[SKIPPED]:<6}{note}"
            )
        return out


def _expected_to_hold(ident: Identity, variant: str, p: IdentityParams) -> bool:
    if ident.erratum and variant == AS_PRINTED:
        return p.m is None or p.m == 1
    return True


def run_suite(grid: Grid, tags: Optional[Iterable[str]] = None,
              variants: Iterable[str] = VARIANTS) -> SuiteSummary:
    """Check every requested identity over ``grid``.

    Expectations: every report must hold, except as-printed erratum forms at
    m != 1, which may fail; each such tag must fail at least once whenever the
    grid contains an m != 1 point (otherwise the erratum went undetected).
    Violations are collected in ``unexpected``.
    """
    tags = list(CATALOG) if tags is None else list(tags)
    for t in tags:
        get_identity(t)
    wanted = set(variants)
    reports: List[IdentityReport] = []
    counts: Dict[Tuple[str, str], Counter] = defaultdict(Counter)
    unexpected: List[str] = []

    for tag in sorted(set(tags)):
        ident = CATALOG[tag]
        vs = [v for v in ident.variants if v in wanted]
        if not vs and CORRECTED in wanted:
            # the printed form is the correct one for this entry
            vs = [AS_PRINTED]
        points = sorted(expand_grid(ident, grid), key=IdentityParams.sort_key)
        for variant in vs:
            erratum_failures = 0
            erratum_points = 0
            for p in points:
                rep = check_identity(tag, p, variant)
                reports.append(rep)
                counts[(tag, variant)][rep.verdict] += 1
                if rep.verdict == SKIPPED:
                    continue
                if _expected_to_hold(ident, variant, p):
                    if rep.verdict != HOLDS:
                        unexpected.append(f"{tag} {variant} fails at {p.to_json()}")
                else:
                    erratum_points += 1
                    erratum_failures += rep.verdict == FAILS
            if erratum_points and not erratum_failures:
                unexpected.append(f"{tag} {variant}: expected at least one failure for m != 1, none found")

    return SuiteSummary(reports, dict(counts), unexpected)
