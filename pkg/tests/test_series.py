from fractions import Fraction

import pytest

from oracles import ordered_partition_count
from tannydowling.polynomials import eval_poly, geometric_polynomial, noncentral_td
from tannydowling.series import (
    ConvergenceError,
    SeriesNotConverged,
    ftilde_series,
    geometric_series_value,
    power_sum,
    series_sum_exact,
)

F = Fraction
EPS = F(1, 10**20)


def test_w2_at_one():
    e = ftilde_series(1, 0, 2, 1, EPS, 10**4)
    assert 3 in e
    assert e.width <= EPS
    # sum_k k^2 / 2^k = 6
    assert power_sum(2, F(1, 2)) == 6


def test_n_zero_gives_one():
    for m, a, x in [(1, 0, 1), (2, 5, F(1, 3)), (3, -2, F(-1, 2))]:
        assert 1 in ftilde_series(m, a, 0, x, EPS)


def test_noncentral_value():
    e = ftilde_series(2, 1, 2, 1, EPS, 10**4)
    assert eval_poly(noncentral_td(2, 1, 2), 1) in e


def test_geometric_series_value():
    assert ordered_partition_count(3) in geometric_series_value(3, 1, EPS)
    assert 1 in geometric_series_value(0, F(2, 7), EPS)
    assert 1 in geometric_series_value(2, F(1, 2), EPS)
    e = geometric_series_value(2, F(-1, 3), EPS)
    assert F(-1, 9) in e


def test_ordered_bell_via_series():
    for n in range(11):
        e = geometric_series_value(n, 1, EPS)
        assert ordered_partition_count(n) in e if n <= 8 else eval_poly(geometric_polynomial(n), 1) in e


def test_monotone_refinement():
    prev = None
    for p in range(2, 30, 3):
        e = ftilde_series(3, F(1, 2), 4, F(5, 3), F(1, 10**p))
        if prev is not None:
            assert prev.lo <= e.lo and e.hi <= prev.hi
            assert e.terms_used >= prev.terms_used
        prev = e


@pytest.mark.parametrize("m,x", [(1, F(-1, 2)), (1, -1), (2, -3), (0, 1), (-1, F(1, 4))])
def test_convergence_domain(m, x):
    with pytest.raises(ConvergenceError):
        ftilde_series(m, 0, 2, x, EPS)


def test_unconverged_carries_partial_result():
    with pytest.raises(SeriesNotConverged) as info:
        ftilde_series(1, 0, 5, 3, EPS, max_terms=10)
    assert info.value.partial_sum > 0


def test_zero_x_is_exact():
    e = ftilde_series(2, 3, 4, 0, EPS)
    assert e.lo == e.hi == 81


def test_rejects_nonpositive_eps():
    with pytest.raises(ValueError):
        ftilde_series(1, 0, 1, 1, 0)


def test_series_sum_exact_matches_partial_sums():
    # partial sums approach the closed form
    m, a, n, x = F(2), F(1), 3, F(1, 2)
    q = x / (m + x)
    s = sum(m / (m + x) * q ** k * (m * k - a) ** n for k in range(400))
    assert abs(series_sum_exact(m, a, n, x) - s) < F(1, 10**30)
