"""Memoized (n, k) number triangles.

Families:

* ``stirling2``          S(n, k)
* ``translated_whitney`` m**(n-k) S(n, k)
* ``noncentral_whitney`` sum_j C(n, j) (-a)**(n-j) m**(j-k) S(j, k)
* ``whitney``            Dowling-lattice numbers W_m(n, k)

The noncentral numbers are served from the triangular recurrence

    W(n, k) = W(n-1, k-1) + (m k - a) W(n-1, k),    W(0, 0) = 1,

which is checked against the binomial-Stirling sum in the test suite
(:func:`noncentral_whitney_sum` is kept as that reference route).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Tuple

from .arith import RationalLike, binomial, factorial, int_pow, to_rational

__all__ = [
    "TriangleCache",
    "stirling2",
    "stirling2_row",
    "translated_whitney",
    "translated_whitney_explicit",
    "noncentral_whitney",
    "noncentral_whitney_row",
    "noncentral_whitney_sum",
    "whitney",
    "whitney_explicit",
    "clear_caches",
]

Row = Tuple[Fraction, ...]


class TriangleCache:
    """Growable table of immutable rows for one (family, parameters) key.

    ``step(prev_row, n)`` must return row ``n`` (length n+1) given row n-1;
    row 0 is ``(1,)`` for every family here.  Rows are appended under a lock,
    so concurrent readers only ever see completed rows.
    """

    def __init__(self, family: str, key: Hashable, step: Callable[[Row, int], Row]):
        self.family = family
        self.key = key
        self._step = step
        self._rows: List[Row] = [(Fraction(1),)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    def row(self, n: int) -> Row:
        if n < 0:
            raise ValueError("row index must be >= 0")
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                i = len(self._rows)
                r = tuple(self._step(self._rows[-1], i))
                if len(r) != i + 1:
                    raise AssertionError(f"{self.family}: row {i} has length {len(r)}")
                self._rows.append(r)
            return self._rows[n]

    def get(self, n: int, k: int) -> Fraction:
        if n < 0 or k < 0 or k > n:
            return Fraction(0)
        return self.row(n)[k]


_registry: Dict[Tuple[str, Hashable], TriangleCache] = {}
_registry_lock = threading.Lock()


def _cache(family: str, key: Hashable, step: Callable[[Row, int], Row]) -> TriangleCache:
    c = _registry.get((family, key))
    if c is None:
        with _registry_lock:
            c = _registry.setdefault((family, key), TriangleCache(family, key, step))
    return c


def clear_caches() -> None:
    with _registry_lock:
        _registry.clear()


def _linear_step(weight: Callable[[int], Fraction]) -> Callable[[Row, int], Row]:
    # T(n,k) = T(n-1,k-1) + weight(k) T(n-1,k)
    def step(prev: Row, n: int) -> Row:
        out = []
        for k in range(n + 1):
            v = prev[k - 1] if k >= 1 else Fraction(0)
            if k < n:
                v += weight(k) * prev[k]
            out.append(v)
        return tuple(out)

    return step


def _stirling_cache() -> TriangleCache:
    return _cache("stirling2", None, _linear_step(Fraction))


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    return int(_stirling_cache().get(n, k))


def stirling2_row(n: int) -> List[int]:
    return [int(v) for v in _stirling_cache().row(n)]


def translated_whitney(m: RationalLike, n: int, k: int) -> Fraction:
    """m**(n-k) S(n, k), from the recurrence T(n,k) = T(n-1,k-1) + m k T(n-1,k)."""
    m = to_rational(m)
    cache = _cache("translated_whitney", m, _linear_step(lambda k: m * k))
    return cache.get(n, k)


def translated_whitney_explicit(m: RationalLike, n: int, k: int) -> Fraction:
    """Alternating-sum form: (1/(m^k k!)) sum_j (-1)^(k-j) C(k, j) (m j)^n."""
    m = to_rational(m)
    if m == 0:
        raise ValueError("m must be nonzero")
    if k < 0 or k > n:
        return Fraction(0)
    s = sum((int_pow(-1, k - j) * binomial(k, j) * int_pow(m * j, n) for j in range(k + 1)), Fraction(0))
    return s / (int_pow(m, k) * factorial(k))


def _check_m(m: Fraction) -> None:
    if m == 0:
        raise ValueError("m must be nonzero")


def _noncentral_cache(m: Fraction, a: Fraction) -> TriangleCache:
    return _cache("noncentral_whitney", (m, a), _linear_step(lambda k: m * k - a))


def noncentral_whitney(m: RationalLike, a: RationalLike, n: int, k: int) -> Fraction:
    m, a = to_rational(m), to_rational(a)
    _check_m(m)
    return _noncentral_cache(m, a).get(n, k)


def noncentral_whitney_row(m: RationalLike, a: RationalLike, n: int) -> Row:
    m, a = to_rational(m), to_rational(a)
    _check_m(m)
    return _noncentral_cache(m, a).row(n)


def noncentral_whitney_sum(m: RationalLike, a: RationalLike, n: int, k: int) -> Fraction:
    """sum_j C(n, j) (-a)^(n-j) m^(j-k) S(j, k), evaluated term by term."""
    m, a = to_rational(m), to_rational(a)
    _check_m(m)
    if k < 0 or k > n:
        return Fraction(0)
    total = Fraction(0)
    for j in range(k, n + 1):
        total += binomial(n, j) * int_pow(-a, n - j) * int_pow(m, j - k) * stirling2(j, k)
    return total


def whitney(m: RationalLike, n: int, k: int) -> Fraction:
    """Whitney numbers of the second kind of the Dowling lattice.

    Computed from the explicit alternating sum
    ``W_m(n,k) = (1/(m^k k!)) sum_j (-1)^(k-j) C(k,j) (m j + 1)^n``,
    which is a separate route from the noncentral triangle with ``a = -1``.
    """
    m = to_rational(m)
    _check_m(m)
    cache = _cache("whitney", m, lambda prev, n_: tuple(whitney_explicit(m, n_, k) for k in range(n_ + 1)))
    return cache.get(n, k)


def whitney_explicit(m: RationalLike, n: int, k: int) -> Fraction:
    m = to_rational(m)
    _check_m(m)
    if k < 0 or k > n:
        return Fraction(0)
    s = sum((int_pow(-1, k - j) * binomial(k, j) * int_pow(m * j + 1, n) for j in range(k + 1)), Fraction(0))
    return s / (int_pow(m, k) * factorial(k))
