"""Constant-term pipelines for v_2n and the series kernels they are built from.

Two routes go through Laurent series in z whose negative powers must cancel:
Faa di Bruno on W = psi~(z + 1/z) with psi~(x) = psi(x) - log x, and Hoppe's
formula on F(g(z)) with F(u) = psi(1/u) + log u and g(z) = z/(z^2 + 1). In
both, the cancellation is asserted before the constant term is read, which
makes the truncation order self-certifying.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .classical import bernoulli_number
from .exactnum import binomial
from .kernels import a_poly_recurrence, bell_der_laurent
from .poly import RatPoly
from .report import VerifyReport
from .series import LaurentSeries, TruncSeries, expand_V, ratfunc_expand

__all__ = [
    "CancellationError",
    "g_power_derivative",
    "hoppe_fk_coeff_check",
    "hoppe_fk_sum",
    "ik_oracle",
    "ik_oracle_check",
    "ik_series",
    "polynomial_v_check",
    "polynomial_v_report",
    "psi_j_direct",
    "psi_j_expansion",
    "psi_regrouping_check",
    "s_power",
    "v_faa_di_bruno",
    "v_hoppe",
]


class CancellationError(ArithmeticError):
    """A negative power of z survived where the analysis says it must cancel."""


def _require_no_poles(series: LaurentSeries, what: str) -> None:
    neg = series.negative_part()
    if neg:
        e = min(neg)
        raise CancellationError(f"{what}: coefficient of z^{e} is {neg[e]}, expected 0")


def _check_even_index(m: int) -> int:
    if m < 2 or m % 2:
        raise ValueError(f"expected an even index >= 2, got {m}")
    return m // 2


@lru_cache(maxsize=None)
def s_power(m: int, N: int) -> TruncSeries:
    """(z/(z^2+1))^m = sum_r (-1)^r C(m+r-1, r) z^(m+2r), through z^N."""
    coeffs = [Fraction(0)] * (N + 1)
    r = 0
    while m + 2 * r <= N:
        coeffs[m + 2 * r] = Fraction((-1) ** r * binomial(m + r - 1, r)) if m else Fraction(int(r == 0))
        r += 1
    return TruncSeries(coeffs, N)


# -- I_k(z) = psi~^(k)(z + 1/z) ---------------------------------------------

@lru_cache(maxsize=None)
def ik_series(k: int, N: int) -> TruncSeries:
    """I_k(z) = (-1)^(k-1) k! s^(k+1) (1/2 + sum_i B_2i/(k+2i) C(k+2i, k) s^(2i-1)), s = z/(z^2+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if N < k + 1:
        raise ValueError("N must be >= k + 1")
    out = s_power(k + 1, N) / 2
    i = 1
    while k + 2 * i <= N:
        c = bernoulli_number(2 * i) * binomial(k + 2 * i, k) / (k + 2 * i)
        out = out + s_power(k + 2 * i, N) * c
        i += 1
    return out * ((-1) ** (k - 1) * factorial(k))


def ik_oracle(k: int, N: int) -> TruncSeries:
    """I_k by differentiating psi~(x) ~ -u/2 - sum B_2i/(2i) u^(2i), u = 1/x, k times
    via d/dx = -u^2 d/du, then substituting u = z/(z^2+1) by plain series powers."""
    if k < 1:
        raise ValueError("k must be >= 1")
    deg = N
    coeffs = [Fraction(0)] * (deg + 1)
    coeffs[1] = Fraction(-1, 2)
    for i in range(1, deg // 2 + 1):
        coeffs[2 * i] = -bernoulli_number(2 * i) / (2 * i)
    p = RatPoly(coeffs)
    for _ in range(k):
        p = RatPoly([0, 0, -1]) * p.derivative()
    s = ratfunc_expand(RatPoly([0, 1]), RatPoly([1, 0, 1]), N)
    out = TruncSeries([], N)
    power = TruncSeries.one(N)
    for e in range(p.degree + 1):
        if e > N:
            break
        if p[e]:
            out = out + power * p[e]
        power = power * s
    return out


def v_faa_di_bruno(m: int) -> Fraction:
    """v_2n from W^(2n)(0) = const. term of sum_k I_k(z) B_{2n,k}(h'(z), ...), h = z + 1/z."""
    n = _check_even_index(m)
    # B_{m,k}(h', ...) starts at z^(-m-k) >= z^(-2m); I_k known through z^(2m) leaves z^0 exact
    order = 2 * m
    total = LaurentSeries(0, [], order)
    for k in range(1, m + 1):
        total = total + bell_der_laurent(m, k) * ik_series(k, order).to_laurent()
    _require_no_poles(total, f"W^({m}) expansion")
    return total.constant_term() / factorial(m) + Fraction((-1) ** (n - 1), n)


# -- psi_j(z + 1/z) -----------------------------------------------------------

@lru_cache(maxsize=None)
def psi_j_expansion(j: int, N: int) -> TruncSeries:
    """Asymptotic series of the j-th polygamma at z + 1/z, as z -> 0, through z^N.

    Regrouped form: (-1)^(j-1)/2 z^(j+1) sum_r (-1)^r (j+r)!/r! z^(2r)
    + (-1)^(j-1) z^j sum_l [sum_{k<=l} (-1)^(l-k) B_2k (k+j+l-1)!/((2k)! (l-k)!)] z^(2l).
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    sign = (-1) ** (j - 1)
    coeffs = [Fraction(0)] * (N + 1)
    r = 0
    while j + 1 + 2 * r <= N:
        coeffs[j + 1 + 2 * r] += Fraction(sign * (-1) ** r * factorial(j + r), 2 * factorial(r))
        r += 1
    l = 0
    while j + 2 * l <= N:
        inner = sum(
            (
                (-1) ** (l - k) * bernoulli_number(2 * k) * Fraction(factorial(k + j + l - 1), factorial(2 * k) * factorial(l - k))
                for k in range(l + 1)
            ),
            Fraction(0),
        )
        coeffs[j + 2 * l] += sign * inner
        l += 1
    return TruncSeries(coeffs, N)


def psi_j_direct(j: int, N: int) -> TruncSeries:
    """The same series from psi_j(w) ~ (-1)^(j-1)[(j-1)!/w^j + j!/(2w^(j+1)) + sum B_2k (2k+j-1)!/((2k)! w^(2k+j))]
    with 1/w = z/(z^2+1) expanded by series powers."""
    if j < 1:
        raise ValueError("j must be >= 1")
    s = ratfunc_expand(RatPoly([0, 1]), RatPoly([1, 0, 1]), N)
    out = s**j * factorial(j - 1) + s ** (j + 1) * Fraction(factorial(j), 2)
    k = 1
    while 2 * k + j <= N:
        out = out + s ** (2 * k + j) * (bernoulli_number(2 * k) * Fraction(factorial(2 * k + j - 1), factorial(2 * k)))
        k += 1
    return out * (-1) ** (j - 1)


def psi_regrouping_check(j_max: int = 4, N: int = 12) -> VerifyReport:
    """Regrouped double-sum series for psi_j(z + 1/z) against direct composition."""
    rep = VerifyReport("psi_regrouping", (1, j_max))
    with rep.timed():
        c = rep.check("regrouped psi_j(z+1/z) series equals direct composition", "asymptotic expansion of psi_j(z+1/z)")
        for j in range(1, j_max + 1):
            a, b = psi_j_expansion(j, N), psi_j_direct(j, N)
            c.record(a == b, j=j, regrouped=list(a.coeffs), direct=list(b.coeffs))
    return rep


def polynomial_v_check(n: int, N: int) -> bool:
    """d^n V/dz^n = (-1)^(n-1) (n-1)! z^(-n) + z^(-2n) sum_j A_{j,n}(z) psi_j(z + 1/z) through z^(N-n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if N < n + 2:
        raise ValueError("N must be >= n + 2")
    lhs = expand_V(N)
    for _ in range(n):
        lhs = lhs.derivative()
    target = N - n
    rhs = LaurentSeries(-n, [(-1) ** (n - 1) * factorial(n - 1)])
    for j, a in enumerate(a_poly_recurrence(n), start=1):
        # psi_j(z + 1/z) must be known through z^(N+n) to survive the z^(-2n) shift
        term = LaurentSeries.from_poly(a) * psi_j_expansion(j, N + n).to_laurent()
        rhs = rhs + term.shift(-2 * n)
    rhs = rhs.truncate(target)
    if rhs.negative_part():
        return False
    return all(rhs.coefficient(e) == lhs[e] for e in range(target + 1))


# -- Hoppe's formula ----------------------------------------------------------

def _pm_falling(l: int, k: int) -> Fraction:
    """r!-free part (l+k-1)!/(l-1)!, zero at l = 0 where d^k z^(-l) vanishes."""
    if l == 0:
        return Fraction(0)
    return Fraction(factorial(l + k - 1), factorial(l - 1))


def hoppe_fk_sum(r: int, k: int) -> Fraction:
    """sum_l (-1)^l r! (l+k-1)! / (l! (r-l)! (l-1)!), with the l = 0 term zero."""
    return sum(
        ((-1) ** l * Fraction(factorial(r), factorial(l) * factorial(r - l)) * _pm_falling(l, k) for l in range(r + 1)),
        Fraction(0),
    )


def g_power_derivative(n: int, j: int, N: int) -> LaurentSeries:
    """d^n/dz^n [g(z)^j] = n! sum_r (-1)^r C(j+r-1, r) C(2r+j, n) z^(2r+j-n), through z^N."""
    lo = j - n
    coeffs = []
    e = lo
    r = 0
    while 2 * r + j - n <= N:
        coeffs.append(Fraction(factorial(n) * (-1) ** r * binomial(j + r - 1, r) * binomial(2 * r + j, n)))
        coeffs.append(Fraction(0))
        r += 1
    return LaurentSeries(lo, coeffs, N)


def hoppe_fk_coeff_check(k_max: int) -> VerifyReport:
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    rep = VerifyReport("hoppe_kernels", (1, k_max))
    with rep.timed():
        c_sum = rep.check(
            "sum_l (-1)^l r!(l+k-1)!/(l!(r-l)!(l-1)!) = (-1)^r k! C(k-1, r-1)",
            "coefficients of d^k psi(1/z) via Hoppe's formula",
        )
        for k in range(1, k_max + 1):
            for r in range(1, k + 1):
                lhs = hoppe_fk_sum(r, k)
                rhs = (-1) ** r * factorial(k) * binomial(k - 1, r - 1)
                c_sum.record(lhs == rhs, r=r, k=k, lhs=lhs, rhs=rhs)
        c_der = rep.check(
            "d^n g^j from the binomial series equals termwise differentiation",
            "derivatives of powers of z/(z^2+1)",
        )
        order = 8
        for j in range(1, 6):
            base = ratfunc_expand(RatPoly.monomial(j), RatPoly([1, 0, 1]) ** j, order + 6)
            for n in range(0, 6):
                d = base
                for _ in range(n):
                    d = d.derivative()
                got = g_power_derivative(n, j, order)
                ok = all(got.coefficient(e) == d[e] for e in range(0, order + 1))
                ok = ok and not got.negative_part()
                c_der.record(ok, n=n, j=j)
    return rep


def _inv_one_plus_z2_power(p: int, N: int) -> LaurentSeries:
    """(1 + z^2)^(-p) through z^N."""
    return s_power(p, N + p).to_laurent().shift(-p).truncate(N)


def _fk_of_g(k: int, order: int) -> LaurentSeries:
    """F^(k)(g(z)) through z^order, F(u) = psi(1/u) + log u, g = z/(z^2+1)."""
    one_z2 = RatPoly([1, 0, 1])
    total = LaurentSeries.from_poly(one_z2**k, -k) * ((-1) ** (k - 1) * factorial(k - 1))
    for r in range(1, k + 1):
        c = Fraction((-1) ** k * factorial(k) * binomial(k - 1, r - 1), factorial(r))
        pref = LaurentSeries.from_poly(one_z2 ** (k + r), -(k + r))
        psi = psi_j_expansion(r, order + k + r).to_laurent()
        total = total + pref * psi * c
    _require_no_poles(total, f"F^({k})(g(z))")
    return total.truncate(order)


def _pnk_of_g(m: int, k: int, order: int) -> LaurentSeries:
    """P_{m,k}(g(z)) through z^order; the j = 0 term vanishes since d^m[1] = 0."""
    total = LaurentSeries(0, [], order)
    for j in range(1, k + 1):
        inner = g_power_derivative(m, j, order + m).shift(m - j)  # the r-sum, starting at z^0
        inv = _inv_one_plus_z2_power(k - j, order + m)
        term = inv * inner * ((-1) ** (k - j) * binomial(k, j))
        total = total + term.shift(k - m)
    return total.truncate(order)


def v_hoppe(m: int) -> Fraction:
    """v_2n from the constant term of (1/(2n)!) sum_k F^(k)(g(z)) P_{2n,k}(g(z))/k!, plus (-1)^(n-1)/n."""
    n = _check_even_index(m)
    order = 2 * m
    total = LaurentSeries(0, [], order)
    for k in range(1, m + 1):
        total = total + _fk_of_g(k, order) * _pnk_of_g(m, k, order) * Fraction(1, factorial(k))
    _require_no_poles(total, f"Hoppe expansion of d^{m} F(g(z))")
    return total.constant_term() / factorial(m) + Fraction((-1) ** (n - 1), n)


def ik_oracle_check(k_max: int = 6, N: int = 14) -> VerifyReport:
    rep = VerifyReport("ik_series", (1, k_max))
    with rep.timed():
        c = rep.check("I_k from the Bernoulli form equals the differentiated digamma tail", "Bernoulli form of I_k(z)")
        for k in range(1, k_max + 1):
            c.record(ik_series(k, N) == ik_oracle(k, N), k=k)
    return rep


def polynomial_v_report(n_max: int = 5, N: int = 14) -> VerifyReport:
    rep = VerifyReport("polynomial_v", (1, n_max))
    with rep.timed():
        c = rep.check(
            "V^(n) = (-1)^(n-1)(n-1)! z^-n + z^-2n sum_j A_jn psi_j(z+1/z)",
            "n-th derivative of V through the polynomials A_{j,n}",
        )
        for n in range(1, n_max + 1):
            c.record(polynomial_v_check(n, N), n=n, order=N)
    return rep
