from fractions import Fraction

import pytest

from zagierpoly.classical import bernoulli_number
from zagierpoly.vcoeff import (
    HEAVY_METHODS,
    LIGHT_METHODS,
    VMethod,
    cross_check_all,
    f_closed_form,
    f_direct,
    f_sum_check,
    legendre_forward,
    legendre_inverse,
    legendre_inversion_check,
    v_cheb_umbral,
    v_method,
    v_parity,
    v_series,
    v_umbral,
    v_zagier_eval,
    z_mod2_period_check,
    z_recurrence,
    z_recurrence_check,
)

PRINTED_V = [Fraction(-1, 2), Fraction(11, 12), Fraction(1, 2), Fraction(-13, 40), Fraction(-1, 2), Fraction(29, 630),
             Fraction(1, 2), Fraction(109, 560), Fraction(-1, 2), Fraction(-67, 132), Fraction(1, 2), Fraction(6571, 6006)]


def test_light_methods_reproduce_printed_list():
    for n, want in enumerate(PRINTED_V, start=1):
        assert v_umbral(n) == v_parity(n) == v_zagier_eval(n) == v_series(n) == want
        if n % 2 == 0:
            assert v_cheb_umbral(n) == want


def test_v_zero_and_errors():
    assert v_umbral(0) == 0
    with pytest.raises(ValueError):
        v_cheb_umbral(3)
    with pytest.raises(ValueError):
        v_method(VMethod.RECURRENCE, 5)


def test_odd_index_closed_form():
    for m in range(1, 61):
        assert v_umbral(2 * m - 1) == Fraction((-1) ** m, 2)


def test_z_recurrence():
    z = z_recurrence(3)
    assert z[0] == Fraction(11, 3) == 4 * Fraction(11, 12)
    assert z[1] == Fraction(-13, 5)
    assert z[2] == Fraction(58, 105)
    assert z_recurrence_check(30).ok


def test_z_denominators_odd():
    for n, z in enumerate(z_recurrence(150), start=1):
        assert z.denominator % 2 == 1, n


def test_z_mod2():
    assert z_mod2_period_check(60).ok
    with pytest.raises(ValueError):
        z_mod2_period_check(5)


def test_legendre_pair():
    basis = [1, 0, 0, 0]
    assert legendre_inverse(legendre_forward(basis)) == basis
    a = [2 * n * ((-1) ** (n + 1) * v_parity(2 * n) - Fraction(1, n)) for n in range(1, 11)]
    assert legendre_inverse(a) == [(-1) ** n * bernoulli_number(2 * n) for n in range(1, 11)]
    assert legendre_inversion_check(15, trials=5).ok


def test_f_sum():
    assert f_direct(1) == 42 == f_closed_form(1)
    assert f_direct(2) == 2730
    assert f_sum_check(12).ok


def test_cross_check_small():
    rep = cross_check_all(13, 6)
    assert rep.ok
    assert len(LIGHT_METHODS) == 6 and len(HEAVY_METHODS) == 2
    with pytest.raises(ValueError):
        cross_check_all(4, 6)
