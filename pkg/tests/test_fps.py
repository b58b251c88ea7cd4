from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from oracles import ordered_partition_count
from tannydowling.fps import (
    TruncatedSeries,
    egf_values,
    exp_linear,
    ftilde_egf,
    mul,
    reciprocal,
)
from tannydowling.polynomials import eval_poly, noncentral_td

F = Fraction

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def series(order=6, nonzero_head=False):
    head = fractions.filter(lambda c: c != 0) if nonzero_head else fractions
    return st.builds(
        lambda h, tail: TruncatedSeries([h] + tail),
        head,
        st.lists(fractions, min_size=order, max_size=order),
    )


def test_exp_linear():
    assert exp_linear(0, 5).coeffs == [1, 0, 0, 0, 0, 0]
    # Taylor coefficients of e^z
    assert exp_linear(1, 3).coeffs == [F(1), F(1), F(1, 2), F(1, 6)]
    assert exp_linear(-2, 2).coeffs == [F(1), F(-2), F(2)]


def test_mul():
    assert mul(TruncatedSeries([1, 1, 0]), TruncatedSeries([1, -1, 0])).coeffs == [1, 0, -1]
    assert mul(exp_linear(1, 6), exp_linear(-1, 6)).coeffs == [1] + [0] * 6
    assert mul(exp_linear(1, 3), exp_linear(1, 3)) == exp_linear(2, 3)


def test_mul_truncates_to_min_order():
    assert mul(exp_linear(1, 2), exp_linear(1, 5)).order == 2


def test_reciprocal():
    assert reciprocal(TruncatedSeries([1, -1, 0, 0, 0])).coeffs == [1] * 5
    assert reciprocal(TruncatedSeries([2, 0, 0])).coeffs == [F(1, 2), 0, 0]
    s = reciprocal(1 - (exp_linear(1, 4) - 1))
    assert s.coeffs == [F(1), F(1), F(3, 2), F(13, 6), F(75, 24)]
    assert egf_values(s) == [ordered_partition_count(n) for n in range(5)]
    with pytest.raises(ZeroDivisionError):
        reciprocal(TruncatedSeries([0, 1]))


@settings(max_examples=100)
@given(series(nonzero_head=True))
def test_reciprocal_is_inverse(s):
    one = mul(s, reciprocal(s))
    assert one.coeffs == [1] + [0] * s.order


@given(series(), series(), fractions)
def test_egf_values_linear(s, t, c):
    lhs = egf_values(s + t * c)
    rhs = [u + c * v for u, v in zip(egf_values(s), egf_values(t))]
    assert lhs == rhs


def test_egf_values():
    assert egf_values(TruncatedSeries([1, 1, F(1, 2)])) == [1, 1, 1]


def test_ftilde_egf_examples():
    assert ftilde_egf(1, 0, 1, 4) == [ordered_partition_count(n) for n in range(5)]
    for m, a in [(2, 1), (3, -2), (F(1, 2), F(5, 3))]:
        assert ftilde_egf(m, a, 0, 6) == [F(-a) ** n for n in range(7)]
    assert ftilde_egf(2, 1, 1, 3) == [eval_poly(noncentral_td(2, 1, n), 1) for n in range(4)]


def test_ftilde_egf_rejects_zero_m():
    with pytest.raises(ValueError):
        ftilde_egf(0, 1, 1, 3)


def test_series_arithmetic_helpers():
    s = TruncatedSeries([1, 2, 3])
    assert (s - s).coeffs == [0, 0, 0]
    assert (2 * s).coeffs == [2, 4, 6]
    assert (1 / TruncatedSeries([1, -1, 0])).coeffs == [1, 1, 1]
    assert TruncatedSeries([5], order=3).coeffs == [5, 0, 0, 0]
    # ordinary coefficient n equals EGF value / n!
    assert [c * factorial(n) for n, c in enumerate(exp_linear(3, 4).coeffs)] == [3 ** n for n in range(5)]
