from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zagierpoly.exactnum import INFINITE, binomial, binomial_row, denom, factorize, is_prime, nu_p, primes_up_to, reduce_mod_2k

from oracles import pascal_row

nonzero_fractions = st.fractions(max_denominator=10**6).filter(lambda q: q != 0)
odd_denominator = st.builds(
    Fraction, st.integers(-(10**9), 10**9), st.integers(0, 10**6).map(lambda d: 2 * d + 1)
)


def test_binomial_matches_pascal():
    for n in range(30):
        assert [binomial(n, k) for k in range(n + 1)] == pascal_row(n)
        assert list(binomial_row(n)) == pascal_row(n)


def test_binomial_outside_range():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_primes():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [p for p in range(100) if is_prime(p)] == primes_up_to(99)
    assert primes_up_to(1) == []


def test_factorize_roundtrip():
    for n in range(1, 2000):
        prod = 1
        for p, e in factorize(n).items():
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_nu_p_examples():
    assert nu_p(Fraction(3, 4), 2) == -2
    assert nu_p(Fraction(1, 24), 2) == -3
    assert nu_p(Fraction(-27, 80), 2) == -4
    assert nu_p(0, 2) == INFINITE
    with pytest.raises(ValueError):
        nu_p(3, 4)


def test_reduce_mod_2k():
    assert reduce_mod_2k(Fraction(11, 3), 1) == 1
    assert reduce_mod_2k(Fraction(1, 3), 3) == 3  # 3 * 3 = 9 = 1 (mod 8)
    assert reduce_mod_2k(-1, 3) == 7
    with pytest.raises(ValueError):
        reduce_mod_2k(Fraction(1, 2), 3)
    assert denom(Fraction(6, 4)) == 2


@given(nonzero_fractions, nonzero_fractions)
def test_nu_p_is_a_valuation(a, b):
    for p in (2, 3, 5):
        assert nu_p(a * b, p) == nu_p(a, p) + nu_p(b, p)
        assert nu_p(a + b, p) >= min(nu_p(a, p), nu_p(b, p))


@given(odd_denominator, odd_denominator, st.integers(1, 12))
def test_reduce_mod_2k_is_a_ring_map(a, b, k):
    m = 1 << k
    assert reduce_mod_2k(a + b, k) == (reduce_mod_2k(a, k) + reduce_mod_2k(b, k)) % m
    assert reduce_mod_2k(a * b, k) == reduce_mod_2k(a, k) * reduce_mod_2k(b, k) % m
    # reducing further is consistent
    assert reduce_mod_2k(a, k) % 2 == reduce_mod_2k(a, 1)
