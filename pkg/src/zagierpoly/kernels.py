"""Partial Bell polynomials, the A_{j,n} polynomial family, and the nested
binomial identity that falls out of the Bell-polynomial pipeline."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Sequence

from .classical import bernoulli_number
from .exactnum import binomial
from .poly import X, RatPoly
from .report import VerifyReport
from .series import LaurentSeries

__all__ = [
    "a_poly_check",
    "a_poly_explicit",
    "a_poly_hypergeometric",
    "a_poly_recurrence",
    "bell_binomial",
    "bell_der_check",
    "bell_der_closed",
    "bell_der_direct",
    "bell_der_grid_check",
    "bell_der_laurent",
    "bell_identity_checks",
    "bell_partial",
    "bell_partial_enumerate",
    "bell_table",
    "nested_identity_check",
    "nested_identity_lhs",
    "nested_identity_rhs",
]


# -- partial Bell polynomials -----------------------------------------------

def bell_table(n: int, xs: Sequence) -> list[list[Fraction]]:
    """T[m][k] = B_{m,k}(x_1, x_2, ...) for 0 <= k <= m <= n.

    Uses B_{m,k} = sum_j C(m-1, j-1) x_j B_{m-j,k-1} with B_{0,0} = 1;
    ``xs[i]`` is x_{i+1} and must cover x_1..x_n.
    """
    xs = [Fraction(x) for x in xs]
    if len(xs) < n:
        raise ValueError(f"need {n} arguments, got {len(xs)}")
    T = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    T[0][0] = Fraction(1)
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            T[m][k] = sum(
                (binomial(m - 1, j - 1) * xs[j - 1] * T[m - j][k - 1] for j in range(1, m - k + 2)),
                Fraction(0),
            )
    return T


def _check_bell_args(n: int, k: int, args: Sequence) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if len(args) != n - k + 1:
        raise ValueError(f"B_{{{n},{k}}} takes {n - k + 1} arguments, got {len(args)}")


def bell_partial(n: int, k: int, args: Sequence) -> Fraction:
    """B_{n,k}(x_1, ..., x_{n-k+1})."""
    _check_bell_args(n, k, args)
    if k == 0:
        return Fraction(int(n == 0))
    # the recurrence only ever reads x_1..x_{n-k+1} for this (n, k)
    padded = list(args) + [0] * (k - 1)
    return bell_table(n, padded)[n][k]


def bell_partial_enumerate(n: int, k: int, args: Sequence) -> Fraction:
    """B_{n,k} by the partition sum over sigma(n, k); exponential, kept as an oracle."""
    _check_bell_args(n, k, args)
    if n > 8:
        raise ValueError("partition enumeration is limited to n <= 8")
    if k == 0:
        return Fraction(int(n == 0))
    xs = [Fraction(x) for x in args]
    m = n - k + 1
    total = Fraction(0)
    for js in product(*(range(k + 1) for _ in range(m))):
        if sum(js) != k or sum((i + 1) * j for i, j in enumerate(js)) != n:
            continue
        term = Fraction(factorial(n))
        for i, j in enumerate(js):
            term *= (xs[i] / factorial(i + 1)) ** j / factorial(j)
        total += term
    return total


def _random_fraction(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 7))


def bell_identity_checks(n_max: int, points: int = 20, seed: int = 0) -> VerifyReport:
    """Homogeneity, reduction and factorial-argument identities for 1 <= k <= n <= n_max."""
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    rng = random.Random(seed)
    rep = VerifyReport("bell_identities", (1, n_max))
    with rep.timed():
        c_enum = rep.check("recurrence equals partition sum", "partition-sum definition of B_{n,k}")
        c_hom = rep.check(
            "B_nk(x1, s t^2 x2, s t^3 x3, ...) = s^k t^n B_nk(x1/(st), x2, ...)",
            "homogeneity of partial Bell polynomials",
        )
        c_red = rep.check(
            "B_nk(x) = n!/(n-k)! sum_l x1^l/l! B_{n-k,k-l}(x2/2, x3/3, ...)",
            "reduction of partial Bell polynomials",
        )
        c_fac = rep.check("B_nk(1!, 2!, ...) = C(n-1, k-1) n!/k!", "Lah numbers as Bell values")
        for n in range(1, n_max + 1):
            fac = [factorial(i) for i in range(1, n + 1)]
            for k in range(1, n + 1):
                c_fac.record(
                    bell_partial(n, k, fac[: n - k + 1]) == binomial(n - 1, k - 1) * Fraction(factorial(n), factorial(k)),
                    n=n,
                    k=k,
                )
            for _ in range(points):
                xs = [_random_fraction(rng) for _ in range(n)]
                s = _random_fraction(rng, 1, 9) * rng.choice((1, -1))
                t = _random_fraction(rng, 1, 9) * rng.choice((1, -1))
                T = bell_table(n, xs)
                scaled = [xs[0]] + [s * t**i * xs[i - 1] for i in range(2, n + 1)]
                T_scaled = bell_table(n, scaled)
                T_shift = bell_table(n, [xs[0] / (s * t)] + xs[1:])
                halved = [xs[i] / (i + 1) for i in range(1, n)]
                T_half = bell_table(n, halved + [0])
                for k in range(1, n + 1):
                    if n <= 8:
                        c_enum.record(T[n][k] == bell_partial_enumerate(n, k, xs[: n - k + 1]), n=n, k=k)
                    lhs = T_scaled[n][k]
                    rhs = s**k * t**n * T_shift[n][k]
                    c_hom.record(lhs == rhs, n=n, k=k, s=s, t=t)
                    red = sum(
                        (xs[0] ** l / factorial(l) * _bell_or_zero(T_half, n - k, k - l) for l in range(k + 1)),
                        Fraction(0),
                    )
                    red *= Fraction(factorial(n), factorial(n - k))
                    c_red.record(T[n][k] == red, n=n, k=k)
    return rep


def _bell_or_zero(T, m: int, k: int) -> Fraction:
    if k < 0 or k > m:
        return Fraction(0)
    return T[m][k]


def bell_binomial(a: int, b: int) -> int:
    """Binomial used in the closed form for B_{n,k}(h', h'', ...).

    Standard zero convention, except C(-1, -1) = 1: that entry carries the
    k = n term, where the Bell value collapses to h'(z)^n.
    """
    if a == -1 and b == -1:
        return 1
    if a < 0 or b < 0 or b > a:
        return 0
    return binomial(a, b)


def _h_derivative(i: int, z: Fraction) -> Fraction:
    """i-th derivative of h(z) = z + 1/z."""
    if i == 1:
        return 1 - z**-2
    return (-1) ** i * factorial(i) * z ** (-i - 1)


def bell_der_direct(n: int, k: int, z) -> Fraction:
    """B_{n,k}(h'(z), ..., h^(n-k+1)(z)) evaluated from the derivatives of h."""
    z = Fraction(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    return bell_partial(n, k, [_h_derivative(i, z) for i in range(1, n - k + 2)])


def bell_der_closed(n: int, k: int, z) -> Fraction:
    """(-1)^n n!/z^(n+k) sum_l C(n-k-1, k-l-1) (1-z^2)^l / (l! (k-l)!)."""
    z = Fraction(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    s = sum(
        (Fraction(bell_binomial(n - k - 1, k - l - 1), factorial(l) * factorial(k - l)) * (1 - z * z) ** l for l in range(k + 1)),
        Fraction(0),
    )
    return (-1) ** n * factorial(n) * s / z ** (n + k)


@lru_cache(maxsize=None)
def bell_der_laurent(n: int, k: int) -> LaurentSeries:
    """The closed form for B_{n,k}(h', ...) as an exact Laurent polynomial in z."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    one_minus_z2 = RatPoly([1, 0, -1])
    p = RatPoly()
    for l in range(k + 1):
        c = bell_binomial(n - k - 1, k - l - 1)
        if c:
            p = p + one_minus_z2**l * Fraction(c, factorial(l) * factorial(k - l))
    return LaurentSeries.from_poly(p * ((-1) ** n * factorial(n)), -(n + k))


def bell_der_check(n: int, k: int, z) -> bool:
    """Closed form for B_{n,k}(h'(z), ...) equals direct evaluation at z."""
    z = Fraction(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    return bell_der_direct(n, k, z) == bell_der_closed(n, k, z)


# -- the polynomials A_{j,n} ------------------------------------------------

@lru_cache(maxsize=None)
def a_poly_recurrence(n: int) -> tuple[RatPoly, ...]:
    """(A_{1,n}, ..., A_{n,n}) from the derivative recurrence, A_{1,1} = z^2 - 1.

    These satisfy z^(2n) V^(n)(z) = (-1)^(n-1) (n-1)! z^n + sum_j A_{j,n}(z) psi_j(z + 1/z).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    zz1 = X * X - 1
    if n == 1:
        return (zz1,)
    prev = a_poly_recurrence(n - 1)
    m = n - 1
    out = []
    for j in range(1, n + 1):
        if j == n:
            out.append(zz1 * prev[m - 1])
            continue
        a = -2 * m * X * prev[j - 1] + X * X * prev[j - 1].derivative()
        if j >= 2:
            a = a + zz1 * prev[j - 2]
        out.append(a)
    return tuple(out)


def _check_jn(j: int, n: int) -> None:
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got j={j}, n={n}")


def a_poly_explicit(j: int, n: int) -> RatPoly:
    """Closed form of A_{j,n}."""
    _check_jn(j, n)
    if j == n:
        return (X * X - 1) ** n
    coeffs = [Fraction(0)] * (n + j - 1)
    pref = Fraction((-1) ** n * factorial(n), factorial(j))
    for r in range(j):
        coeffs[n - j + 2 * r] = pref * (-1) ** r * binomial(n - 1 - r, n - j) * binomial(j, r)
    return RatPoly(coeffs)


def _hyp2f1_terminating(a: int, b: int, c: int, x: RatPoly) -> RatPoly:
    """2F1(a, b; c; x) for a nonpositive integer a, with c not hitting zero first."""
    out = RatPoly()
    term = Fraction(1)
    i = 0
    while True:
        out = out + x**i * term
        if a + i == 0:
            return out
        if c + i == 0:
            raise ZeroDivisionError("lower parameter reaches zero before the series terminates")
        term = term * (a + i) * (b + i) / ((c + i) * (i + 1))
        i += 1


def a_poly_hypergeometric(j: int, n: int) -> RatPoly:
    """A_{j,n} for j < n as (-1)^n z^(n-j) C(n-1, j-1) C(n, j) (n-j)! 2F1(1-j, -j; 1-n; z^2)."""
    _check_jn(j, n)
    if j == n:
        raise ValueError("the hypergeometric form covers j < n only")
    pref = (-1) ** n * binomial(n - 1, j - 1) * binomial(n, j) * factorial(n - j)
    return RatPoly.monomial(n - j, pref) * _hyp2f1_terminating(1 - j, -j, 1 - n, X * X)


def a_poly_check(n_max: int) -> VerifyReport:
    """Recurrence, closed form, hypergeometric form and degrees of A_{j,n} for n <= n_max."""
    rep = VerifyReport("a_poly", (1, n_max))
    with rep.timed():
        c_exp = rep.check("recurrence equals closed form", "closed form of A_{j,n}")
        c_hyp = rep.check(
            "closed form equals z^(n-j) C(n-1,j-1) C(n,j) (n-j)! (-1)^n 2F1(1-j,-j;1-n;z^2), j < n",
            "hypergeometric form of A_{j,n}",
        )
        c_deg = rep.check("deg A_{j,n} = n+j-2 for j < n, 2n for j = n", "degree of A_{j,n}")
        for n in range(1, n_max + 1):
            rec = a_poly_recurrence(n)
            for j in range(1, n + 1):
                a = rec[j - 1]
                c_exp.record(a == a_poly_explicit(j, n), j=j, n=n)
                if j < n:
                    c_hyp.record(a == a_poly_hypergeometric(j, n), j=j, n=n)
                want = 2 * n if j == n else n + j - 2
                c_deg.record(a.degree == want, j=j, n=n, degree=a.degree)
    return rep


# -- the nested identity ----------------------------------------------------

def _nested_term(i: int, j: int, k: int, l: int, m: int, r: int) -> Fraction:
    c = (
        binomial(k, l)
        * binomial(l, r)
        * binomial(k + 2 * i, k)
        * bell_binomial(2 * m - k - 1, k - l - 1)
        * binomial(k + i + m - r - j - 1, k + 2 * i - 1)
    )
    if not c:
        return Fraction(0)
    return (-1) ** (i + j + k) * c * bernoulli_number(2 * i) / (k + 2 * i)


def nested_identity_lhs(m: int, j: int) -> Fraction:
    """sum over k in [1, 2m], l in [0, k], r in [0, m], i in [1, m-r-j] of the summand."""
    total = Fraction(0)
    for k in range(1, 2 * m + 1):
        for l in range(k + 1):
            for r in range(min(l, m) + 1):
                for i in range(1, m - r - j + 1):
                    total += _nested_term(i, j, k, l, m, r)
    return total


def nested_identity_rhs(m: int, j: int) -> Fraction:
    if j > 0:
        return Fraction(0)
    return sum(
        ((-1) ** s * binomial(m + s - 1, m - s) * bernoulli_number(2 * s) / (2 * s) for s in range(1, m + 1)),
        Fraction(0),
    )


def nested_identity_check(m_max: int) -> VerifyReport:
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    rep = VerifyReport("nested_identity", (1, m_max))
    with rep.timed():
        c = rep.check(
            "nested Bell/Bernoulli sum = 0 for j > 0, sum_s (-1)^s C(m+s-1,m-s) B_2s/(2s) for j = 0",
            "vanishing of negative powers in the Bell-polynomial expansion",
        )
        for m in range(1, m_max + 1):
            for j in range(m):
                lhs, rhs = nested_identity_lhs(m, j), nested_identity_rhs(m, j)
                c.record(lhs == rhs, m=m, j=j, lhs=lhs, rhs=rhs)
    return rep


def bell_der_grid_check(n_max: int, points: int = 20, seed: int = 0) -> VerifyReport:
    """bell_der_check for 1 <= k <= n <= n_max at random nonzero rationals."""
    rng = random.Random(seed)
    zs: list[Fraction] = []
    while len(zs) < points:
        z = _random_fraction(rng)
        if z and z not in zs:
            zs.append(z)
    rep = VerifyReport("bell_der", (1, n_max))
    with rep.timed():
        c = rep.check(
            "B_nk(h'(z), ...) = (-1)^n n!/z^(n+k) sum_l C(n-k-1,k-l-1)(1-z^2)^l/(l!(k-l)!)",
            "partial Bell polynomials at the derivatives of z + 1/z",
        )
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                for z in zs:
                    c.record(bell_der_check(n, k, z), n=n, k=k, z=z)
    return rep
