from fractions import Fraction

import pytest

from zagierpoly.pipelines import (
    CancellationError,
    _require_no_poles,
    g_power_derivative,
    hoppe_fk_coeff_check,
    hoppe_fk_sum,
    ik_oracle,
    ik_series,
    polynomial_v_check,
    psi_j_direct,
    psi_j_expansion,
    psi_regrouping_check,
    s_power,
    v_faa_di_bruno,
    v_hoppe,
)
from zagierpoly.poly import RatPoly
from zagierpoly.series import LaurentSeries, ratfunc_expand


def test_s_power_is_binomial_series():
    s = ratfunc_expand(RatPoly([0, 1]), RatPoly([1, 0, 1]), 15)
    for m in range(0, 7):
        assert s_power(m, 15) == s**m


def test_ik_series():
    i1 = ik_series(1, 6)
    # s^2/2 + B_2 s^3 = z^2/2 + z^3/6 + O(z^4)
    assert i1[2] == Fraction(1, 2)
    assert i1[3] == Fraction(1, 6)
    for k in range(1, 6):
        series = ik_series(k, 12)
        assert series.valuation() == k + 1
        assert series == ik_oracle(k, 12)


def test_psi_regrouping():
    assert psi_regrouping_check(4, 12).ok
    assert psi_j_expansion(2, 10) == psi_j_direct(2, 10)


def test_polynomial_v():
    assert polynomial_v_check(1, 10)
    assert polynomial_v_check(3, 12)
    with pytest.raises(ValueError):
        polynomial_v_check(3, 4)


def test_hoppe_kernels():
    assert hoppe_fk_sum(1, 3) == -6
    assert hoppe_fk_sum(2, 2) == 2
    assert hoppe_fk_coeff_check(8).ok
    d = g_power_derivative(2, 1, 6)
    assert d.negative_part() == {}


@pytest.mark.parametrize("m,value", [(2, Fraction(11, 12)), (4, Fraction(-13, 40)), (6, Fraction(29, 630)), (8, Fraction(109, 560))])
def test_pipelines_match_printed_values(m, value):
    assert v_faa_di_bruno(m) == value
    assert v_hoppe(m) == value


def test_pipelines_reject_odd_index():
    with pytest.raises(ValueError):
        v_faa_di_bruno(3)
    with pytest.raises(ValueError):
        v_hoppe(0)


def test_surviving_pole_is_an_error():
    with pytest.raises(CancellationError):
        _require_no_poles(LaurentSeries(-1, [1, 2]), "probe")
    _require_no_poles(LaurentSeries(-1, [0, 2]), "probe")
