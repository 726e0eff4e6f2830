from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from zagierpoly.exactnum import binomial
from zagierpoly.kernels import (
    a_poly_check,
    a_poly_explicit,
    a_poly_hypergeometric,
    a_poly_recurrence,
    bell_der_check,
    bell_der_closed,
    bell_der_direct,
    bell_identity_checks,
    bell_partial,
    bell_partial_enumerate,
    nested_identity_check,
    nested_identity_lhs,
    nested_identity_rhs,
)
from zagierpoly.poly import X, RatPoly

frac = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 10))


def test_bell_small_cases():
    x1, x2 = Fraction(2), Fraction(5)
    assert bell_partial(3, 2, [x1, x2]) == 3 * x1 * x2
    assert bell_partial(5, 5, [x1]) == x1**5
    assert bell_partial(0, 0, [7]) == 1
    assert bell_partial(4, 0, [1, 2, 3, 4, 5]) == 0
    # all-ones arguments count set partitions (Stirling numbers of the second kind)
    assert [bell_partial(5, k, [1] * (6 - k)) for k in range(1, 6)] == [1, 15, 25, 10, 1]


def test_bell_factorial_arguments():
    for n in range(1, 9):
        for k in range(1, n + 1):
            args = [factorial(i) for i in range(1, n - k + 2)]
            assert bell_partial(n, k, args) == binomial(n - 1, k - 1) * Fraction(factorial(n), factorial(k))


def test_bell_rejects_bad_arguments():
    with pytest.raises(ValueError):
        bell_partial(3, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        bell_partial(2, 3, [1])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.data())
def test_bell_recurrence_equals_partition_sum(n, data):
    k = data.draw(st.integers(1, n))
    args = data.draw(st.lists(frac, min_size=n - k + 1, max_size=n - k + 1))
    assert bell_partial(n, k, args) == bell_partial_enumerate(n, k, args)


def test_bell_identities():
    assert bell_identity_checks(8, points=5).ok


def test_bell_der_examples():
    assert bell_der_direct(1, 1, 2) == Fraction(3, 4) == bell_der_closed(1, 1, 2)
    assert bell_der_check(4, 2, Fraction(1, 3))
    assert bell_der_closed(6, 6, 5) == (1 - Fraction(1, 25)) ** 6
    with pytest.raises(ValueError):
        bell_der_check(2, 1, 0)


def test_a_poly_examples():
    assert a_poly_recurrence(1) == (X * X - 1,)
    assert a_poly_explicit(2, 2) == (X * X - 1) ** 2
    # one recurrence step: A_{1,2} = -2z(z^2-1) + z^2 * 2z
    assert a_poly_recurrence(2)[0] == -2 * X * (X * X - 1) + X * X * 2 * X
    assert a_poly_check(12).ok
    with pytest.raises(ValueError):
        a_poly_explicit(0, 3)


def test_hypergeometric_prefactor_is_C_n_minus_1():
    # The form with C(n-j, j-1) in front disagrees, e.g. at (j, n) = (2, 4).
    j, n = 2, 4
    fixed = a_poly_hypergeometric(j, n)
    assert fixed == a_poly_explicit(j, n)
    as_printed = fixed * Fraction(binomial(n - j, j - 1), binomial(n - 1, j - 1))
    assert as_printed != a_poly_explicit(j, n)


def test_nested_identity():
    assert nested_identity_lhs(1, 0) == nested_identity_rhs(1, 0) == Fraction(-1, 12)
    assert nested_identity_lhs(2, 1) == 0
    assert nested_identity_check(5).ok
