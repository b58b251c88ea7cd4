from fractions import Fraction
import json

import pytest
from hypothesis import given, settings, strategies as st

from tannydowling.identities import (
    AS_PRINTED,
    CATALOG,
    CORRECTED,
    ERRATUM_TAGS,
    Grid,
    IdentityParams,
    UnknownIdentity,
    check_identity,
    expand_grid,
    run_suite,
)

F = Fraction
P = IdentityParams.make

EXPECTED_ERRATA = {
    "SPEC_A0", "SPEC_6TH", "SPEC_7TH", "SPEC_8TH", "SPEC_9TH", "SPEC_11TH",
    "SPEC_17TH", "SPEC_18TH", "SPEC_20TH", "SPEC_22ND",
}


def test_erratum_flags():
    assert set(ERRATUM_TAGS) == EXPECTED_ERRATA
    for tag in EXPECTED_ERRATA:
        assert CATALOG[tag].variants == (AS_PRINTED, CORRECTED)


def test_thm2_example():
    rep = check_identity("THM2", P(m=1, a=0, n=2, x=1))
    assert rep.verdict == "holds"
    assert rep.lhs == rep.rhs == 6


def test_kargin1_example():
    rep = check_identity("KARGIN1", P(n=1, x=1))
    assert rep.verdict == "holds"
    assert rep.lhs == rep.rhs == 4


def test_spec_8th_example():
    p = P(m=2, n=2, x=2)
    assert check_identity("SPEC_8TH", p, AS_PRINTED).verdict == "fails"
    assert check_identity("SPEC_8TH", p, CORRECTED).verdict == "holds"


def test_thm2_at_n0_uses_zero_power_convention():
    for m in (1, 2, 3):
        assert check_identity("THM2", P(m=m, a=0, n=0, x=F(1, 2))).verdict == "holds"


def test_skips():
    assert check_identity("THM4", P(m=1, a1=0, a2=0, n=2, x1=1, x2=1)).verdict == "skipped"
    assert check_identity("THM5", P(m=2, a=1, n=2, x=-2)).skip_reason == "singular point x = -m"
    assert check_identity("THM6", P(m=1, a=1, n=2, x=F(-1, 2))).verdict == "skipped"
    assert check_identity("SERIES_21", P(m=1, a=0, n=2, x=F(-1, 2))).verdict == "skipped"
    assert check_identity("DILKURT_1", P(n=0)).verdict == "skipped"
    assert check_identity("SPEC_6TH", P(m=1, n=0, x=1), AS_PRINTED).verdict == "skipped"
    assert check_identity("SPEC_6TH", P(m=1, n=0, x=1), CORRECTED).verdict == "holds"
    assert check_identity("THM1", P(m=0, a=1, n=2, x=1)).skip_reason == "requires m != 0"


def test_unknown_tag_and_variant():
    with pytest.raises(UnknownIdentity):
        check_identity("NOPE", P(n=1))
    with pytest.raises(ValueError):
        check_identity("THM1", P(m=1, a=0, n=1, x=1), CORRECTED)
    with pytest.raises(ValueError):
        check_identity("THM1", P(n=1))


def test_thm3_reduces_to_kargin1():
    for n in range(8):
        for x in (F(1, 2), 1, 2):
            t3 = check_identity("THM3", P(m=1, a1=0, a2=0, n=n, x=x))
            k1 = check_identity("KARGIN1", P(n=n, x=x))
            # both left sides are the same binomial sum times x and (1 + x) respectively
            assert t3.verdict == k1.verdict == "holds"
            assert t3.lhs / x == k1.lhs / (1 + x)


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([1, 2, 3, F(1, 2)]), rationals, rationals, st.integers(0, 7),
       rationals.filter(lambda v: v != 0), rationals.filter(lambda v: v != 0))
def test_thm4_symmetry(m, a1, a2, n, x1, x2):
    if x1 == x2:
        return
    r1 = check_identity("THM4", P(m=m, a1=a1, a2=a2, n=n, x1=x1, x2=x2))
    r2 = check_identity("THM4", P(m=m, a1=a2, a2=a1, n=n, x1=x2, x2=x1))
    assert r1.verdict == r2.verdict == "holds"
    # swapping negates the cleared factor (x2 - x1) on both sides
    assert r1.lhs == -r2.lhs and r1.rhs == -r2.rhs


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(sorted(set(CATALOG) - EXPECTED_ERRATA - {"THM4", "SPEC_THM4_A0", "KARGIN2"})),
       st.sampled_from([1, 2, 3, F(3, 2), F(-2)]), rationals, rationals, st.integers(0, 6), rationals)
def test_identities_hold_at_random_rational_points(tag, m, a, a1, n, x):
    ident = CATALOG[tag]
    kw = {"m": m, "a": a, "a1": a1, "a2": a, "r": a, "x": x, "n": n, "k": n // 2}
    p = P(**{name: kw[name] for name in ident.params})
    rep = check_identity(tag, p)
    assert rep.verdict in ("holds", "skipped"), rep


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(EXPECTED_ERRATA)), st.sampled_from([2, 3, F(1, 2), F(5, 3)]),
       st.integers(0, 6), rationals)
def test_corrected_forms_hold_for_any_m(tag, m, n, x):
    p = P(m=m, n=n, x=x)
    assert check_identity(tag, p, CORRECTED).verdict in ("holds", "skipped")


def test_printed_errata_hold_at_m1():
    grid = Grid.make(m_set=[1], n_max=8)
    summary = run_suite(grid, sorted(EXPECTED_ERRATA), [AS_PRINTED])
    assert summary.ok
    assert all(r.verdict != "fails" for r in summary.reports)


def test_printed_errata_fail_at_m2():
    grid = Grid.make(m_set=[2], n_max=6)
    summary = run_suite(grid, sorted(EXPECTED_ERRATA), [AS_PRINTED])
    assert summary.ok
    for tag in EXPECTED_ERRATA:
        assert summary.counts[(tag, AS_PRINTED)]["fails"] > 0


def test_run_suite_flags_undetected_erratum():
    # with n_max = 0 the printed forms cannot differ from the corrected ones
    summary = run_suite(Grid.make(m_set=[2], n_max=0, x_set=[1]), ["SPEC_A0"], [AS_PRINTED])
    assert not summary.ok


def test_expand_grid_uses_only_consumed_params():
    grid = Grid.make(m_set=[1, 2], a_set=[0, 1], n_max=2, x_set=[1, 2])
    pts = expand_grid(CATALOG["DILKURT_1"], grid)
    assert [p.n for p in pts] == [0, 1, 2]
    assert len(expand_grid(CATALOG["THM3"], grid)) == 2 * 2 * 2 * 3 * 2
    assert len(expand_grid(CATALOG["NCW_SUM"], grid)) == 2 * 2 * (1 + 2 + 3)


def test_report_json_schema():
    rep = check_identity("THM1", P(m=2, a=F(-1, 3), n=3, x=F(5, 3)))
    d = rep.to_json()
    assert set(d) == {"id", "variant", "params", "lhs", "rhs", "verdict", "skip_reason"}
    assert d["params"] == {"m": "2", "a": "-1/3", "x": "5/3", "n": 3}
    json.dumps(d)
    assert F(d["lhs"]) == rep.lhs


def test_summary_is_sorted_and_deterministic():
    grid = Grid.make(m_set=[2, 1], a_set=[1, 0], n_max=3, x_set=[2, 1])
    s1 = run_suite(grid, ["THM2", "THM1"])
    s2 = run_suite(grid, ["THM1", "THM2"])
    assert [r.to_json() for r in s1.reports] == [r.to_json() for r in s2.reports]
    assert [r.id for r in s1.reports] == sorted(r.id for r in s1.reports)
