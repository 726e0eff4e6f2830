"""Modified Bernoulli numbers B*_n, Zagier polynomials B*_n(x), and their arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .classical import (
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_poly,
    chebyshev_T,
    chebyshev_U,
    vsc_primes,
)
from .exactnum import binomial, denom, factorize, nu_p, primes_up_to
from .poly import X, RatPoly
from .report import VerifyReport

__all__ = [
    "ZagierRecord",
    "alpha",
    "alpha_at",
    "bstar",
    "bstar59_check",
    "bstar_poly",
    "congruence_suite",
    "conjecture_scan",
    "denominator_independence_check",
    "nu2_8n_period_check",
    "nu2_closed_form",
    "nu2_theorem_check",
    "odd_index_suite",
    "record",
    "reflection_check",
    "translation_check",
    "umbral_bstar",
    "umbral_check",
    "zagier_congruence_check",
]


@dataclass(frozen=True)
class ZagierRecord:
    n: int
    value: Fraction
    alpha: int
    nu2: int


def _check_index(n: int) -> None:
    if n < 1:
        raise ValueError("B*_0 undefined: n must be >= 1")


@lru_cache(maxsize=None)
def bstar(n: int) -> Fraction:
    """B*_n = sum_{r=0}^{n} C(n+r, 2r) B_r / (n + r)."""
    _check_index(n)
    bs = bernoulli_numbers(n)
    return sum(
        (Fraction(binomial(n + r, 2 * r), n + r) * bs[r] for r in range(n + 1) if bs[r]),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def bstar_poly(n: int) -> RatPoly:
    """B*_n(x) = sum_{r=0}^{n} C(n+r, 2r) B_r(x) / (n + r)."""
    _check_index(n)
    out = RatPoly()
    for r in range(n + 1):
        out = out + bernoulli_poly(r) * Fraction(binomial(n + r, 2 * r), n + r)
    return out


def alpha(n: int) -> int:
    """Denominator of B*_n."""
    return denom(bstar(n))


def alpha_at(n: int, j: int) -> int:
    """Denominator of B*_n(j)."""
    return denom(bstar_poly(n)(Fraction(j)))


def record(n: int) -> ZagierRecord:
    v = bstar(n)
    return ZagierRecord(n, v, denom(v), nu_p(v, 2))


def nu2_closed_form(n: int) -> int:
    """Predicted -nu_2(B*_n) = 2 + nu_2(n) - c, with c = 1 if n = 6, 2 if n = 0 (mod 12)."""
    correction = {6: 1, 0: 2}.get(n % 12, 0)
    return 2 + nu_p(n, 2) - correction


def nu2_theorem_check(n_max: int) -> VerifyReport:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rep = VerifyReport("theorem12", (1, n_max))
    with rep.timed():
        c_val = rep.check(
            "-nu_2(B*_n) = 2 + nu_2(n) - [1 if n=6, 2 if n=0 mod 12]",
            "2-adic valuation of B*_n, cases n mod 12",
        )
        c_four = rep.check("4 | alpha_n", "alpha_n is always divisible by 4")
        for n in range(1, n_max + 1):
            v = bstar(n)
            got = -nu_p(v, 2)
            c_val.record(got == nu2_closed_form(n), n=n, got=got, predicted=nu2_closed_form(n))
            c_four.record(denom(v) % 4 == 0, n=n, alpha=denom(v))
    return rep


NU2_8N_PATTERN = (0, 0, 1, 0, 0, 2)


def nu2_8n_period_check(n_max: int) -> VerifyReport:
    """nu_2(8 n B*_{2n}) runs through 0, 0, 1, 0, 0, 2 with period 6."""
    if n_max < 12:
        raise ValueError("n_max must be >= 12")
    rep = VerifyReport("period6", (1, n_max))
    with rep.timed():
        c = rep.check("nu_2(8n B*_2n) = (0,0,1,0,0,2)[(n-1) mod 6]", "nu_2(8nB*_2n) has period 6")
        for n in range(1, n_max + 1):
            got = nu_p(8 * n * bstar(2 * n), 2)
            want = NU2_8N_PATTERN[(n - 1) % 6]
            c.record(got == want, n=n, got=got, expected=want)
    return rep


def translation_check(n_max: int) -> VerifyReport:
    """B*_n(x + 1) = B*_n(x) + U_{n-1}(x/2 + 1)/2."""
    rep = VerifyReport("translation", (1, n_max))
    with rep.timed():
        c = rep.check("B*_n(x+1) = B*_n(x) + U_{n-1}(x/2+1)/2", "Zagier polynomials and Chebyshev U")
        c1 = rep.check("B*_n(1) = B*_n + n/2", "B*_n(1) = B*_n + n/2")
        for n in range(1, n_max + 1):
            p = bstar_poly(n)
            lhs = p.compose(X + 1)
            rhs = p + chebyshev_U(n - 1).compose(X / 2 + 1) / 2
            c.record(lhs == rhs, n=n)
            c1.record(p(1) == bstar(n) + Fraction(n, 2), n=n, value=p(1))
    return rep


def reflection_check(n_max: int) -> VerifyReport:
    """B*_n(-x - 3) = (-1)^n B*_n(x)."""
    rep = VerifyReport("reflection", (1, n_max))
    with rep.timed():
        c = rep.check("B*_n(-x-3) = (-1)^n B*_n(x)", "reflection symmetry of Zagier polynomials")
        for n in range(1, n_max + 1):
            p = bstar_poly(n)
            c.record(p.compose(-X - 3) == p * (-1) ** n, n=n)
    return rep


def odd_index_suite(n_max: int, window: Iterable[int] = range(-10, 11)) -> VerifyReport:
    """Odd-index facts for m = 2n + 1 <= n_max.

    4 B*_m(j) is an odd integer; B*_{2n+1}(0) = (-1)^n/4 + U_2n(1/2)/2;
    B*_{m+12} = B*_m; and the expansion of 2 B*_{2n+1}(x) in odd Bernoulli
    polynomials plus U_2n(x/2) + U_2n((x+1)/2).
    """
    if n_max < 7:
        raise ValueError("n_max must be >= 7")
    js = list(window)
    rep = VerifyReport("odd_index", (1, n_max))
    with rep.timed():
        c_odd = rep.check("4 B*_m(j) is an odd integer", "4B*_{2n+1}(j) are odd integers")
        c_closed = rep.check("B*_{2n+1} = (-1)^n/4 + U_2n(1/2)/2", "closed form of B*_{2n+1}(0)")
        c_per = rep.check("B*_{m+12} = B*_m", "B*_{2n+1} is 6-periodic")
        c_expand = rep.check(
            "2B*_{2n+1}(x) = sum_r (-1)^(n+r) C(n+r+1,2r+1) B_{2r+1}(x)/(n+r+1) + U_2n(x/2) + U_2n((x+1)/2)",
            "odd-index expansion of Zagier polynomials",
        )
        for m in range(1, n_max + 1, 2):
            n = (m - 1) // 2
            p = bstar_poly(m)
            for j in js:
                v = 4 * p(j)
                c_odd.record(v.denominator == 1 and v.numerator % 2 == 1, m=m, j=j, value=v)
            closed = Fraction((-1) ** n, 4) + chebyshev_U(2 * n)(Fraction(1, 2)) / 2
            c_closed.record(bstar(m) == closed, m=m, value=bstar(m), closed_form=closed)
            c_per.record(bstar(m + 12) == bstar(m), m=m, a=bstar(m), b=bstar(m + 12))
            rhs = chebyshev_U(2 * n).compose(X / 2) + chebyshev_U(2 * n).compose((X + 1) / 2)
            for r in range(n + 1):
                rhs = rhs + bernoulli_poly(2 * r + 1) * Fraction(
                    (-1) ** (n + r) * binomial(n + r + 1, 2 * r + 1), n + r + 1
                )
            c_expand.record(2 * p == rhs, m=m)
    return rep


def bstar59_lhs(n: int) -> RatPoly:
    """sum_{r=0}^{n} (-1)^(n+r) C(n+r, 2r) B_2r(x) / (n + r)."""
    out = RatPoly()
    for r in range(n + 1):
        out = out + bernoulli_poly(2 * r) * Fraction((-1) ** (n + r) * binomial(n + r, 2 * r), n + r)
    return out


def bstar59_check(n_max: int) -> VerifyReport:
    """sum_r (-1)^(n+r) C(n+r,2r) B_2r(x)/(n+r) = 2 B*_2n(x - 2)."""
    rep = VerifyReport("bstar59", (1, n_max))
    with rep.timed():
        c = rep.check(
            "sum_r (-1)^(n+r) C(n+r,2r) B_2r(x)/(n+r) = 2B*_2n(x-2)",
            "alternating Bernoulli-polynomial sum for B*_2n(x-2)",
        )
        for n in range(1, n_max + 1):
            c.record(bstar59_lhs(n) == 2 * bstar_poly(2 * n).compose(X - 2), n=n)
    return rep


def umbral_bstar(n: int, x) -> Fraction:
    """eval (1/n) T_n((B + x + 2)/2) with the umbra B^k -> B_k."""
    _check_index(n)
    x = Fraction(x)
    expanded = chebyshev_T(n).compose((X + x + 2) / 2)
    return expanded.umbral_eval(bernoulli_numbers(n)) / n


def denominator_independence_check(n_max: int, window: Iterable[int] = range(-10, 11)) -> VerifyReport:
    """alpha_{n,j} = alpha_n and the numerator of B*_n(j) is odd."""
    js = list(window)
    rep = VerifyReport("denominators", (1, n_max))
    with rep.timed():
        c_eq = rep.check("denom B*_n(j) = denom B*_n", "denominator of B*_n(j) does not depend on j")
        c_odd = rep.check("numerator of B*_n(j) is odd", "numerator over 4t stays odd")
        for n in range(1, n_max + 1):
            a = alpha(n)
            p = bstar_poly(n)
            for j in js:
                v = p(j)
                c_eq.record(v.denominator == a, n=n, j=j, alpha=a, alpha_j=v.denominator)
                c_odd.record(v.numerator % 2 == 1, n=n, j=j, value=v)
    return rep


def _pm1_primes(n: int) -> list[int]:
    """Primes p with (p + 1) | n."""
    return [p for p in primes_up_to(max(n - 1, 1)) if n % (p + 1) == 0]


def zagier_congruence_check(n: int) -> bool:
    """2n B*_n + sum_{(p-1)|n} 1/p - sum_{(p+1)|n} 1/p is an integer (n even)."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    total = 2 * n * bstar(n)
    total += sum(Fraction(1, p) for p in vsc_primes(n))
    total -= sum(Fraction(1, p) for p in _pm1_primes(n))
    return total.denominator == 1


def conjecture_scan(n_max: int) -> VerifyReport:
    """Every prime p | alpha_n has (p - 1) | n or (p + 1) | n.

    Records observations only; the statement is a conjecture.
    """
    rep = VerifyReport("conjecture", (1, n_max))
    with rep.timed():
        c = rep.check("p | alpha_n implies (p-1) | n or (p+1) | n", "conjectured divisibility of alpha_n primes")
        c_bound = rep.check("p | alpha_n implies p <= n + 1", "prime factors of alpha_n are at most n+1")
        for n in range(1, n_max + 1):
            for p in factorize(alpha(n)):
                c.record(n % (p - 1) == 0 or n % (p + 1) == 0, n=n, p=p)
                c_bound.record(p <= n + 1, n=n, p=p)
    return rep


def congruence_suite(n_max: int) -> VerifyReport:
    rep = VerifyReport("zagier_congruence", (2, n_max))
    with rep.timed():
        c = rep.check(
            "2nB*_n = -sum_{(p-1)|n} 1/p + sum_{(p+1)|n} 1/p (mod 1)",
            "Zagier's congruence for 2nB*_n",
        )
        for n in range(2, n_max + 1, 2):
            c.record(zagier_congruence_check(n), n=n)
    return rep


def umbral_check(n_max: int, xs: Iterable = (0, 1, -1, -2, 5, Fraction(-7, 3))) -> VerifyReport:
    """eval (1/n) T_n((B + x + 2)/2) = B*_n(x)."""
    pts = [Fraction(x) for x in xs]
    rep = VerifyReport("umbral", (1, n_max))
    with rep.timed():
        c = rep.check("B*_n(x) = eval T_n((B+x+2)/2)/n", "umbral Chebyshev representation of B*_n(x)")
        for n in range(1, n_max + 1):
            p = bstar_poly(n)
            for x in pts:
                got = umbral_bstar(n, x)
                c.record(got == p(x), n=n, x=x, umbral=got, direct=p(x))
    return rep
