from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zagierpoly.poly import RatPoly
from zagierpoly.series import (
    LaurentSeries,
    ModSeries,
    TruncSeries,
    TruncationError,
    detect_period,
    even_genfun_check,
    even_genfun_rhs,
    expand_V,
    expand_zagier_genfun,
    mod8_genfun_check,
    prop22_check,
    ratfunc_expand,
    series_log1p,
    zagier_genfun_check,
)
from zagierpoly.zagier import bstar

small = st.builds(Fraction, st.integers(-99, 99), st.integers(1, 50))
laurent = st.builds(
    lambda lo, cs: LaurentSeries(lo, cs),
    st.integers(-6, 3),
    st.lists(small, max_size=6),
)
int_coeffs = st.lists(st.integers(-20, 20), min_size=1, max_size=6)


def test_truncated_arithmetic():
    a = TruncSeries([1, 2, 3], 4)
    b = TruncSeries([1, -1], 2)
    assert (a * b).order == 2
    assert list((a * b).coeffs) == [1, 1, 1]
    with pytest.raises(TruncationError):
        (a * b)[3]
    assert (a / a) == TruncSeries.one(4)


def test_ratfunc_expand_fibonacci_like():
    s = ratfunc_expand(RatPoly([2, -3]), RatPoly([1, -3, 1]), 5)
    assert list(s.coeffs) == [2, 3, 7, 18, 47, 123]


def test_log1p():
    z = TruncSeries([0, 1], 6)
    assert list(series_log1p(z).coeffs) == [0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4), Fraction(1, 5), Fraction(-1, 6)]


def test_expand_V_matches_printed_values():
    printed = [0, Fraction(-1, 2), Fraction(11, 12), Fraction(1, 2), Fraction(-13, 40), Fraction(-1, 2),
               Fraction(29, 630), Fraction(1, 2), Fraction(109, 560), Fraction(-1, 2), Fraction(-67, 132),
               Fraction(1, 2), Fraction(6571, 6006)]
    assert list(expand_V(12).coeffs) == printed


def test_zagier_genfun():
    s = expand_zagier_genfun(0, 10)
    assert [s[n] for n in range(1, 11)] == [bstar(n) for n in range(1, 11)]
    assert zagier_genfun_check((0, 1, -1, -2, 5, Fraction(-7, 3)), 20).ok


def test_even_genfun_examples():
    rhs = even_genfun_rhs(8)
    assert rhs[1] == 0
    assert rhs[2] == Fraction(1, 24)
    assert rhs[8] == Fraction(451, 1120)
    assert even_genfun_check(24).ok


def test_even_genfun_printed_bracket_is_not_even():
    # With +2(1-z^4)/(1-z^6) in the bracket, the series has odd terms and misses B*_2.
    printed = even_genfun_rhs(4, as_printed=True)
    assert printed[1] == Fraction(-1, 2)
    assert printed[2] == Fraction(-11, 24)
    assert not even_genfun_check(8, as_printed=True).ok


def test_mod8_and_binomial_sums():
    assert mod8_genfun_check(48).ok
    assert prop22_check(24).ok


def test_detect_period():
    assert detect_period([1, 1, 0] * 5) == 3
    assert detect_period([2] * 4) == 1
    assert detect_period([1, 2, 3, 4]) is None


def test_laurent_order_tracking():
    a = LaurentSeries(-2, [1, 0, 1], order=3)
    b = LaurentSeries(0, [1, 1])
    prod = a * b
    assert prod.order == 3
    assert prod.negative_part() == {-2: 1, -1: 1}
    with pytest.raises(TruncationError):
        prod.coefficient(4)


@given(laurent, laurent, laurent, small)
def test_laurent_ring_laws(a, b, c, k):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) * k == a * k + b * k


@given(int_coeffs, int_coeffs, st.integers(3, 20))
def test_mod_series_commutes_with_reduction(num, den, N):
    den = [1] + den[1:]  # unit constant term
    exact = ratfunc_expand(RatPoly(num), RatPoly(den), N)
    mod = ModSeries.from_ratfunc(num, den, 8, N)
    assert [int(exact[i]) % 8 for i in range(N + 1)] == list(mod.coeffs)
    assert (mod + mod) == mod * 2
