from fractions import Fraction

import pytest

from zagierpoly.classical import (
    bernoulli_mod8,
    bernoulli_mod8_check,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_poly,
    chebT_doubling_check,
    chebU_halfinteger_check,
    chebyshev_T,
    chebyshev_U,
    proof_scan_mod64,
    tridiagonal_det,
    tshift_sum,
    voronoi_check,
    voronoi_grid_check,
    vsc_check,
    vsc_denominator,
)
from zagierpoly.poly import X

from oracles import bernoulli_by_series, chebyshev_T_explicit


def test_bernoulli_against_series_inversion():
    assert bernoulli_numbers(60) == bernoulli_by_series(60)


def test_bernoulli_values():
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert bernoulli_number(13) == 0
    with pytest.raises(ValueError):
        bernoulli_number(-1)


def test_bernoulli_poly():
    assert bernoulli_poly(2) == X * X - X + Fraction(1, 6)
    # B_n(x + 1) - B_n(x) = n x^(n-1)
    for n in range(1, 15):
        p = bernoulli_poly(n)
        assert p.compose(X + 1) - p == n * X ** (n - 1)


def test_vsc():
    assert vsc_denominator(2) == 6
    assert vsc_denominator(12) == 2730
    with pytest.raises(ValueError):
        vsc_denominator(3)
    assert vsc_check(120).ok


def test_bernoulli_mod8():
    assert [bernoulli_mod8(k) for k in range(1, 6)] == [3, 1, 5, 1, 5]
    assert bernoulli_mod8_check(80).ok


def test_voronoi():
    assert voronoi_check(12, 3, 64)
    with pytest.raises(ValueError):
        voronoi_check(12, 2, 64)
    assert voronoi_grid_check(30).ok


def test_proof_scan_mod64_stated_claim_fails_at_m6():
    rep = proof_scan_mod64(200)
    stated = [c for c in rep.checks if "(mod 64), m = 2 mod 4" in c.name][0]
    assert stated.failed > 0
    assert stated.witnesses[0] == {"m": 6, "value": 10}
    others = [c for c in rep.checks if c is not stated]
    assert all(c.failed == 0 for c in others)
    with pytest.raises(ValueError):
        proof_scan_mod64(4)


def test_chebyshev_against_explicit_formula():
    for n in range(25):
        assert list(chebyshev_T(n).coeffs) == chebyshev_T_explicit(n)


def test_chebyshev_U():
    assert chebyshev_U(-1) == 0
    assert chebyshev_U(2) == 4 * X * X - 1
    assert tridiagonal_det(3, Fraction(1, 2)) == chebyshev_U(3)(Fraction(1, 2))
    assert chebU_halfinteger_check(30, range(-5, 6)).ok
    assert chebT_doubling_check(20).ok


def test_tshift_sum():
    for n in range(1, 30):
        assert tshift_sum(n) == chebyshev_T(n).compose(X / 2 + 1) / n
    with pytest.raises(ValueError):
        tshift_sum(0)
