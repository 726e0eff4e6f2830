"""The asymptotic coefficients v_n of V(z) = log z + psi(z + 1/z) by independent
methods, the recurrence for z_n = 4n v_2n, and the kernels behind it.

Bell polynomials and the A_{j,n} family live in :mod:`zagierpoly.kernels`, the
two Laurent constant-term pipelines in :mod:`zagierpoly.pipelines`; both are
re-exported here.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .classical import bernoulli_number, bernoulli_numbers, chebyshev_T
from .exactnum import binomial, reduce_mod_2k
from .kernels import (
    a_poly_check,
    a_poly_explicit,
    a_poly_hypergeometric,
    a_poly_recurrence,
    bell_der_check,
    bell_identity_checks,
    bell_partial,
    bell_partial_enumerate,
    nested_identity_check,
)
from .pipelines import (
    CancellationError,
    hoppe_fk_coeff_check,
    ik_series,
    polynomial_v_check,
    psi_j_expansion,
    v_faa_di_bruno,
    v_hoppe,
)
from .poly import X
from .report import VerifyReport
from .series import detect_period, expand_V
from .zagier import bstar_poly

__all__ = [
    "CancellationError",
    "LIGHT_METHODS",
    "HEAVY_METHODS",
    "VMethod",
    "VMethodResult",
    "a_poly_check",
    "a_poly_explicit",
    "a_poly_hypergeometric",
    "a_poly_recurrence",
    "bell_der_check",
    "bell_identity_checks",
    "bell_partial",
    "bell_partial_enumerate",
    "cross_check_all",
    "f_closed_form",
    "f_direct",
    "f_sum_check",
    "hoppe_fk_coeff_check",
    "ik_series",
    "legendre_forward",
    "legendre_inverse",
    "legendre_inversion_check",
    "nested_identity_check",
    "polynomial_v_check",
    "psi_j_expansion",
    "v_cheb_umbral",
    "v_faa_di_bruno",
    "v_hoppe",
    "v_method",
    "v_parity",
    "v_series",
    "v_umbral",
    "v_zagier_eval",
    "z_mod2_period_check",
    "z_recurrence",
    "z_recurrence_check",
]


class VMethod(enum.Enum):
    UMBRAL = "umbral"
    PARITY = "parity"
    ZAGIER_EVAL = "zagier_eval"
    SERIES = "series"
    CHEB_UMBRAL = "cheb_umbral"
    RECURRENCE = "recurrence"
    FAA_DI_BRUNO = "faa_di_bruno"
    HOPPE = "hoppe"


@dataclass(frozen=True)
class VMethodResult:
    n: int
    method: VMethod
    value: Fraction


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")


def v_umbral(n: int) -> Fraction:
    """v_n = sum_{k <= n/2} (-1)^(n-k+1) C(n-k, k)/(n-k) B_{n-2k}; v_0 = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(0)
    return sum(
        (Fraction((-1) ** (n - k + 1) * binomial(n - k, k), n - k) * bernoulli_number(n - 2 * k) for k in range(n // 2 + 1)),
        Fraction(0),
    )


def v_parity(n: int) -> Fraction:
    """Odd index: v_{2m-1} = (-1)^m/2. Even: v_2m = (-1)^(m+1)[1/m + sum_k (-1)^k C(m+k-1, m-k) B_2k/(2k)]."""
    _check_n(n)
    m = (n + 1) // 2
    if n % 2:
        return Fraction((-1) ** m, 2)
    s = Fraction(1, m) + sum(
        ((-1) ** k * binomial(m + k - 1, m - k) * bernoulli_number(2 * k) / (2 * k) for k in range(1, m + 1)),
        Fraction(0),
    )
    return (-1) ** (m + 1) * s


def v_zagier_eval(n: int) -> Fraction:
    """v_n = -2 B*_n(-1)."""
    _check_n(n)
    return -2 * bstar_poly(n)(-1)


@lru_cache(maxsize=8)
def _v_series_table(N: int) -> tuple[Fraction, ...]:
    return expand_V(N).coeffs


def v_series(n: int) -> Fraction:
    """Coefficient of z^n in the digamma asymptotic series of V."""
    _check_n(n)
    return _v_series_table(n)[n]


def v_cheb_umbral(m: int) -> Fraction:
    """v_2n = -(1/n) T_2n(B/2) with B^k -> B_k, cross-checked on -(1/n) T_n((B^2 - 2)/2)."""
    if m < 2 or m % 2:
        raise ValueError(f"v_cheb_umbral needs an even index >= 2, got {m}")
    n = m // 2
    moments = bernoulli_numbers(m)
    single = chebyshev_T(m)(X / 2).umbral_eval(moments)
    doubled = chebyshev_T(n)((X * X - 2) / 2).umbral_eval(moments)
    if single != doubled:
        raise ArithmeticError(f"T_{m}(x/2) and T_{n}((x^2-2)/2) disagree umbrally: {single} != {doubled}")
    return -single / n


def z_recurrence(n_max: int) -> list[Fraction]:
    """z_1..z_{n_max} from z_n = 2 C(2n, n) - sum_{k<n} C(2n, n+k) z_k - 2 B_2n."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    z: list[Fraction] = []
    for n in range(1, n_max + 1):
        s = sum((binomial(2 * n, n + k) * z[k - 1] for k in range(1, n)), Fraction(0))
        z.append(2 * binomial(2 * n, n) - s - 2 * bernoulli_number(2 * n))
    return z


def z_recurrence_check(n_max: int) -> VerifyReport:
    """z_n = 4n v_2n, and B_2n = C(2n, n) - sum_k C(2n, n+k) 2k v_2k."""
    rep = VerifyReport("z_recurrence", (1, n_max))
    with rep.timed():
        zs = z_recurrence(n_max)
        c_def = rep.check("recurrence z_n equals 4n v_2n", "recurrence for z_n = 4n v_2n")
        c_inv = rep.check("B_2n = C(2n,n) - sum_k C(2n,n+k) 2k v_2k", "Bernoulli numbers recovered from v_2k")
        vs = [v_parity(2 * k) for k in range(1, n_max + 1)]
        for n in range(1, n_max + 1):
            c_def.record(zs[n - 1] == 4 * n * vs[n - 1], n=n, z=zs[n - 1], v=vs[n - 1])
            rhs = binomial(2 * n, n) - sum(
                (binomial(2 * n, n + k) * 2 * k * vs[k - 1] for k in range(1, n + 1)), Fraction(0)
            )
            c_inv.record(rhs == bernoulli_number(2 * n), n=n, rhs=rhs)
    return rep


def z_mod2_period_check(n_max: int) -> VerifyReport:
    if n_max < 6:
        raise ValueError("n_max must be >= 6")
    rep = VerifyReport("z_mod2", (1, n_max))
    with rep.timed():
        zs = z_recurrence(n_max)
        c_odd = rep.check("z_n has odd denominator", "odd denominators carried from 2B_2n")
        for n, z in enumerate(zs, start=1):
            c_odd.record(z.denominator % 2 == 1, n=n, z=z)
        c_per = rep.check("z_n mod 2 has basic period 1, 1, 0", "z_n mod 2 is periodic with period {1,1,0}")
        if c_odd.failed:
            c_per.record(False, reason="even denominator present")
        else:
            res = [reduce_mod_2k(z, 1) for z in zs]
            p = detect_period(res)
            c_per.record(p == 3 and res[:3] == [1, 1, 0], period=p, head=res[:6])
            for n, r in enumerate(res, start=1):
                c_per.record(r == (0 if n % 3 == 0 else 1), n=n, residue=r)
    return rep


def legendre_forward(b: Sequence) -> list[Fraction]:
    """a_n with a_n/(2n) = sum_{k<=n} C(n+k-1, n-k) b_k/(2k); b[0] is b_1."""
    n_max = len(b)
    return [
        2 * n * sum((binomial(n + k - 1, n - k) * Fraction(b[k - 1]) / (2 * k) for k in range(1, n + 1)), Fraction(0))
        for n in range(1, n_max + 1)
    ]


def legendre_inverse(a: Sequence) -> list[Fraction]:
    """b_n = sum_{k<=n} (-1)^(n-k) C(2n, n+k) a_k; a[0] is a_1."""
    n_max = len(a)
    return [
        sum(((-1) ** (n - k) * binomial(2 * n, n + k) * Fraction(a[k - 1]) for k in range(1, n + 1)), Fraction(0))
        for n in range(1, n_max + 1)
    ]


def legendre_inversion_check(n_max: int, trials: int = 20, seed: int = 0) -> VerifyReport:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rng = random.Random(seed)
    rep = VerifyReport("legendre_inversion", (1, n_max))
    with rep.timed():
        c_rt = rep.check("inverse(forward(b)) == b", "Legendre inverse pair")
        samples = [[1] + [0] * (n_max - 1)]
        samples += [[Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(n_max)] for _ in range(trials)]
        for i, b in enumerate(samples):
            c_rt.record(legendre_inverse(legendre_forward(b)) == [Fraction(x) for x in b], sample=i)
        c_bern = rep.check(
            "a_n = 2n((-1)^(n+1) v_2n - 1/n) inverts to (-1)^n B_2n",
            "inversion applied to the even-index formula for v_2n",
        )
        a = [2 * n * ((-1) ** (n + 1) * v_parity(2 * n) - Fraction(1, n)) for n in range(1, n_max + 1)]
        b = legendre_inverse(a)
        for n in range(1, n_max + 1):
            c_bern.record(b[n - 1] == (-1) ** n * bernoulli_number(2 * n), n=n, got=b[n - 1])
    return rep


def f_direct(m: int) -> int:
    """F(m) = sum over all integers k of C(6m+1, 3m+3k-1)."""
    top = 6 * m + 1
    return sum(binomial(top, 3 * m + 3 * k - 1) for k in range(-m, m + 2) if 0 <= 3 * m + 3 * k - 1 <= top)


def f_closed_form(m: int) -> int:
    """(2/3)(64^m - 1)."""
    return 2 * (64**m - 1) // 3


def f_sum_check(m_max: int) -> VerifyReport:
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    rep = VerifyReport("f_sum", (1, m_max))
    with rep.timed():
        c_cf = rep.check("F(m) = (2/3)(64^m - 1)", "closed form of the binomial sum F(m)")
        c_rec = rep.check("-64F(m) + 65F(m+1) - F(m+2) = 0", "three-term recurrence for F(m)")
        c_half = rep.check("sum_{k=1}^m C(6m+1, 3m+3k-1) = (64^m - 1)/3", "half sum by binomial symmetry")
        fs = {m: f_direct(m) for m in range(1, m_max + 3)}
        for m in range(1, m_max + 1):
            c_cf.record(fs[m] == f_closed_form(m), m=m, direct=fs[m], closed=f_closed_form(m))
            r = -64 * fs[m] + 65 * fs[m + 1] - fs[m + 2]
            c_rec.record(r == 0, m=m, residual=r)
            half = sum(binomial(6 * m + 1, 3 * m + 3 * k - 1) for k in range(1, m + 1))
            c_half.record(3 * half == 64**m - 1, m=m, half=half)
    return rep


LIGHT_METHODS = (
    VMethod.UMBRAL,
    VMethod.PARITY,
    VMethod.ZAGIER_EVAL,
    VMethod.SERIES,
    VMethod.CHEB_UMBRAL,
    VMethod.RECURRENCE,
)
HEAVY_METHODS = (VMethod.FAA_DI_BRUNO, VMethod.HOPPE)
_EVEN_ONLY = {VMethod.CHEB_UMBRAL, VMethod.RECURRENCE, VMethod.FAA_DI_BRUNO, VMethod.HOPPE}


def v_method(method: VMethod, n: int) -> Fraction:
    """v_n by one method; even-only methods raise on odd n."""
    _check_n(n)
    if method in _EVEN_ONLY and n % 2:
        raise ValueError(f"{method.value} only computes even-index v_n")
    if method is VMethod.UMBRAL:
        return v_umbral(n)
    if method is VMethod.PARITY:
        return v_parity(n)
    if method is VMethod.ZAGIER_EVAL:
        return v_zagier_eval(n)
    if method is VMethod.SERIES:
        return v_series(n)
    if method is VMethod.CHEB_UMBRAL:
        return v_cheb_umbral(n)
    if method is VMethod.RECURRENCE:
        return z_recurrence(n // 2)[-1] / (2 * n)
    if method is VMethod.FAA_DI_BRUNO:
        return v_faa_di_bruno(n)
    return v_hoppe(n)


def cross_check_all(n_max: int, heavy_max: int = 16) -> VerifyReport:
    """All methods for v_n agree, heavy pipelines on even n <= heavy_max."""
    if heavy_max > n_max:
        raise ValueError("heavy_max must be <= n_max")
    rep = VerifyReport("v_cross_methods", (1, n_max))
    with rep.timed():
        c_light = rep.check("light methods agree on v_n", "v_n by umbral, parity, Zagier-polynomial, series, Chebyshev and recurrence routes")
        c_heavy = rep.check("Faa di Bruno and Hoppe pipelines agree on v_2n", "constant-term pipelines with vanishing negative powers")
        series = _v_series_table(n_max)
        zs = z_recurrence(n_max // 2) if n_max >= 2 else []
        for n in range(1, n_max + 1):
            results = []
            for method in LIGHT_METHODS:
                if method in _EVEN_ONLY and n % 2:
                    continue
                if method is VMethod.SERIES:
                    value = series[n]
                elif method is VMethod.RECURRENCE:
                    value = zs[n // 2 - 1] / (2 * n)
                else:
                    value = v_method(method, n)
                results.append(VMethodResult(n, method, value))
            values = {r.value for r in results}
            c_light.record(len(values) == 1, n=n, results={r.method.value: r.value for r in results})
            if n % 2 == 0 and n <= heavy_max:
                heavy = []
                for method in HEAVY_METHODS:
                    try:
                        heavy.append(VMethodResult(n, method, v_method(method, n)))
                    except CancellationError as exc:
                        c_heavy.record(False, n=n, method=method.value, error=str(exc))
                if heavy:
                    ok = {r.value for r in heavy} == values and len(heavy) == len(HEAVY_METHODS)
                    c_heavy.record(ok, n=n, results={r.method.value: r.value for r in results + heavy})
    return rep
