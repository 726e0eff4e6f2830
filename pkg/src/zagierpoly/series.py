"""Truncated power and Laurent series over the rationals, and residue series modulo 2^k.

All series carry the exponent through which they are known exactly. Products
of truncated series are truncated to what the inputs actually determine, so
a pipeline that reads a coefficient beyond its known range fails loudly
instead of returning a silently wrong value.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .classical import bernoulli_number
from .exactnum import binomial, reduce_mod_2k
from .poly import RatPoly
from .report import VerifyReport

__all__ = [
    "LaurentSeries",
    "ModSeries",
    "TruncSeries",
    "detect_period",
    "even_genfun_check",
    "even_genfun_rhs",
    "mod8_genfun_check",
    "prop22_check",
    "zagier_genfun_check",
    "expand_V",
    "expand_zagier_genfun",
    "psi_tail_terms",
    "ratfunc_expand",
    "series_div",
    "series_log1p",
    "series_mul",
]


class TruncationError(ArithmeticError):
    """A coefficient was requested beyond the known order of a series."""


class TruncSeries:
    """Power series c_0 + c_1 z + ... + c_N z^N (mod z^(N+1))."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order = order

    @classmethod
    def from_poly(cls, p: RatPoly, order: int) -> "TruncSeries":
        return cls(p.coeffs, order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise TruncationError(f"coefficient z^{k} beyond order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def __repr__(self) -> str:
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, min(order, self.order))

    def valuation(self) -> int | float:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            other = TruncSeries([other], self.order)
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __sub__(self, other) -> "TruncSeries":
        return self + (-other if isinstance(other, TruncSeries) else -Fraction(other))

    def __rsub__(self, other) -> "TruncSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        c = Fraction(other)
        return TruncSeries([c * a for a in self.coeffs], self.order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return series_div(self, other)
        c = Fraction(other)
        return TruncSeries([a / c for a in self.coeffs], self.order)

    def __pow__(self, e: int) -> "TruncSeries":
        result = TruncSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            raise TruncationError("derivative of an order-0 series is unknown")
        return TruncSeries([i * c for i, c in enumerate(self.coeffs)][1:], self.order - 1)

    def to_laurent(self) -> "LaurentSeries":
        return LaurentSeries(0, self.coeffs, self.order)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    out = [Fraction(0)] * (n + 1)
    ac, bc = a.coeffs, b.coeffs
    for i in range(n + 1):
        x = ac[i]
        if x:
            for j in range(n + 1 - i):
                if bc[j]:
                    out[i + j] += x * bc[j]
    return TruncSeries(out, n)


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """a / b, with b(0) invertible."""
    if b.coeffs[0] == 0:
        raise ZeroDivisionError("divisor has zero constant term")
    n = min(a.order, b.order)
    b0 = b.coeffs[0]
    q: list[Fraction] = []
    for i in range(n + 1):
        s = a.coeffs[i] - sum(b.coeffs[j] * q[i - j] for j in range(1, i + 1) if b.coeffs[j])
        q.append(s / b0)
    return TruncSeries(q, n)


def series_log1p(u: TruncSeries) -> TruncSeries:
    """log(1 + u) = sum_{m>=1} (-1)^(m+1) u^m / m, for u(0) = 0."""
    if u.coeffs[0] != 0:
        raise ValueError("log1p needs u(0) = 0")
    out = TruncSeries([], u.order)
    v = u.valuation()
    if v == math.inf:
        return out
    power = u
    for m in range(1, u.order // v + 1):
        term = power / m
        out = out + (term if m % 2 else -term)
        power = power * u
    return out


def ratfunc_expand(numer: RatPoly, denom: RatPoly, N: int) -> TruncSeries:
    """Power series of numer/denom through z^N; denom(0) must be nonzero."""
    if denom[0] == 0:
        raise ZeroDivisionError("denominator vanishes at 0")
    return series_div(TruncSeries.from_poly(numer, N), TruncSeries.from_poly(denom, N))


class LaurentSeries:
    """sum_{e >= min_exponent} c_e z^e, known exactly through z^order.

    ``order=None`` marks an exact Laurent polynomial.
    """

    __slots__ = ("min_exponent", "coeffs", "order")

    def __init__(self, min_exponent: int, coeffs: Sequence, order: Optional[int] = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = cs[: max(0, order - min_exponent + 1)]
        # normalize leading zeros away so min_exponent is a true lower bound of the support
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        cs = cs[lead:]
        min_exponent += lead
        if order is None:
            while cs and cs[-1] == 0:
                cs.pop()
        if not cs:
            min_exponent = 0 if order is None else min(0, order + 1)
        self.min_exponent = min_exponent
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentSeries":
        return cls(e, [c])

    @classmethod
    def from_poly(cls, p: RatPoly, shift: int = 0) -> "LaurentSeries":
        """Exact Laurent polynomial z^shift * p(z)."""
        return cls(shift, p.coeffs)

    @property
    def exact(self) -> bool:
        return self.order is None

    @property
    def max_exponent(self) -> int:
        return self.min_exponent + len(self.coeffs) - 1

    def coefficient(self, e: int) -> Fraction:
        if self.order is not None and e > self.order:
            raise TruncationError(f"coefficient z^{e} beyond order {self.order}")
        i = e - self.min_exponent
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    __getitem__ = coefficient

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def negative_part(self) -> dict[int, Fraction]:
        return {
            e: c
            for e, c in ((self.min_exponent + i, c) for i, c in enumerate(self.coeffs))
            if e < 0 and c
        }

    def truncate(self, order: int) -> "LaurentSeries":
        if self.order is not None:
            order = min(order, self.order)
        return LaurentSeries(self.min_exponent, self.coeffs, order)

    def to_trunc(self) -> TruncSeries:
        if self.negative_part():
            raise ValueError("series has negative powers")
        if self.order is None:
            raise ValueError("exact Laurent polynomial: choose an order via truncate()")
        return TruncSeries([self.coefficient(e) for e in range(self.order + 1)], self.order)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by z^k."""
        return LaurentSeries(
            self.min_exponent + k, self.coeffs, None if self.order is None else self.order + k
        )

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.min_exponent, [-c for c in self.coeffs], self.order)

    def __add__(self, other) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries(0, [other])
        orders = [o for o in (self.order, other.order) if o is not None]
        order = min(orders) if orders else None
        lo = min(self.min_exponent, other.min_exponent)
        hi = max(self.max_exponent, other.max_exponent)
        if order is not None:
            hi = min(hi, order)
        return LaurentSeries(lo, [self.coefficient(e) + other.coefficient(e) for e in range(lo, hi + 1)], order)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentSeries":
        return self + (-other if isinstance(other, LaurentSeries) else -Fraction(other))

    def __mul__(self, other) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            if isinstance(other, TruncSeries):
                other = other.to_laurent()
            else:
                c = Fraction(other)
                return LaurentSeries(self.min_exponent, [c * a for a in self.coeffs], self.order)
        bounds = []
        if self.order is not None:
            bounds.append(self.order + other.min_exponent)
        if other.order is not None:
            bounds.append(other.order + self.min_exponent)
        order = min(bounds) if bounds else None
        lo = self.min_exponent + other.min_exponent
        hi = self.max_exponent + other.max_exponent
        if order is not None:
            hi = min(hi, order)
        if hi < lo:
            return LaurentSeries(lo, [], order)
        out = [Fraction(0)] * (hi - lo + 1)
        bc = other.coeffs
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            base = self.min_exponent + i + other.min_exponent - lo
            for j in range(min(len(bc), hi - lo - base + 1)):
                if bc[j]:
                    out[base + j] += a * bc[j]
        return LaurentSeries(lo, out, order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentSeries":
        result = LaurentSeries(0, [1])
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        orders = [o for o in (self.order, other.order) if o is not None]
        hi = max(self.max_exponent, other.max_exponent)
        if orders:
            hi = min(hi, min(orders))
        lo = min(self.min_exponent, other.min_exponent)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, hi + 1))

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"LaurentSeries(min_exponent={self.min_exponent}, "
            f"{[str(c) for c in self.coeffs]}, order={self.order})"
        )


class ModSeries:
    """Power series with residues modulo ``modulus`` (a power of 2 here)."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Iterable[int]):
        self.modulus = modulus
        self.coeffs = tuple(int(c) % modulus for c in coeffs)

    @classmethod
    def from_ratfunc(cls, numer: Sequence[int], denom: Sequence[int], modulus: int, N: int) -> "ModSeries":
        """Expand numer/denom (integer coefficients, denom(0) a unit) through x^N."""
        d0 = denom[0] % modulus
        inv = pow(d0, -1, modulus)
        out: list[int] = []
        for i in range(N + 1):
            s = numer[i] if i < len(numer) else 0
            for j in range(1, min(i, len(denom) - 1) + 1):
                s -= denom[j] * out[i - j]
            out.append(s * inv % modulus)
        return cls(modulus, out)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "ModSeries") -> "ModSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        return ModSeries(self.modulus, [self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other: "ModSeries") -> "ModSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        return ModSeries(self.modulus, [self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __mul__(self, c: int) -> "ModSeries":
        return ModSeries(self.modulus, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, ModSeries) and (self.modulus, self.coeffs) == (other.modulus, other.coeffs)

    __hash__ = None

    def __repr__(self) -> str:
        return f"ModSeries(mod {self.modulus}, {list(self.coeffs)})"


def detect_period(stream: Sequence, min_repeats: int = 2) -> Optional[int]:
    """Smallest p with stream[i + p] == stream[i] throughout, seen at least min_repeats times."""
    n = len(stream)
    for p in range(1, n // max(min_repeats, 1) + 1):
        if all(stream[i + p] == stream[i] for i in range(n - p)):
            return p
    return None


def psi_tail_terms(N: int) -> int:
    """Number of terms of the digamma tail sum_k B_2k/(2k) w^(2k) that reach z^N.

    The k-th term starts at z^(2k) whenever w has valuation 1.
    """
    return (N + 1) // 2


def _psi_tail(w: TruncSeries, N: int) -> TruncSeries:
    """sum_{k>=1} B_2k/(2k) w^(2k) through z^N, for w of valuation >= 1."""
    K = psi_tail_terms(N)
    assert 2 * (K + 1) > N, "next tail term would reach z^N"
    w2 = w * w
    power = w2
    out = TruncSeries([], N)
    for k in range(1, K + 1):
        out = out + power * (bernoulli_number(2 * k) / (2 * k))
        power = power * w2
    return out


def expand_V(N: int) -> TruncSeries:
    """Coefficients v_0..v_N of V(z) = log z + psi(z + 1/z) from the digamma asymptotics.

    V = log(1 + z^2) - s/2 - sum_k B_2k/(2k) s^(2k),  s = z/(1 + z^2).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    z = TruncSeries([0, 1], N)
    s = ratfunc_expand(RatPoly([0, 1]), RatPoly([1, 0, 1]), N)
    return series_log1p(z * z) - s / 2 - _psi_tail(s, N)


def expand_zagier_genfun(x, N: int) -> TruncSeries:
    """sum_n B*_n(x) z^n through z^N from -log(z)/2 - psi(z + 1/z - 1 - x)/2.

    With q = 1 - (1 + x) z + z^2 and w^-1 = z/q the log z terms cancel and
    the series is -log(q)/2 + w^-1/4 + (1/2) sum_k B_2k/(2k) w^(-2k).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    x = Fraction(x)
    q = RatPoly([1, -1 - x, 1])
    winv = ratfunc_expand(RatPoly([0, 1]), q, N)
    return -series_log1p(TruncSeries.from_poly(q - 1, N)) / 2 + winv / 4 + _psi_tail(winv, N) / 2


# -- generating-function checks against the direct definitions -------------

def _zagier():
    from . import zagier

    return zagier


def zagier_genfun_check(xs, N: int) -> VerifyReport:
    """Coefficients of the digamma generating function equal B*_n(x) for 1 <= n <= N."""
    z = _zagier()
    pts = [Fraction(x) for x in xs]
    rep = VerifyReport("zagier_genfun", (1, N))
    with rep.timed():
        c = rep.check(
            "[z^n] (-log z/2 - psi(z+1/z-1-x)/2) = B*_n(x)",
            "generating function of the Zagier polynomials",
        )
        for x in pts:
            ser = expand_zagier_genfun(x, N)
            for n in range(1, N + 1):
                want = z.bstar_poly(n)(x)
                c.record(ser[n] == want, x=x, n=n, series=ser[n], direct=want)
    return rep


def even_genfun_rhs(N: int, as_printed: bool = False) -> TruncSeries:
    """Closed form of sum_n B*_2n z^2n through z^N.

    From -log(z)/2 - psi(u+2)/4 - psi(u-1)/4 with u = z + 1/z, shifting both
    digamma arguments back to u gives

        -V(z)/2 - (z/4) [1/(z^2+1) - 2z(1-z^2)/(1-z^6)].

    ``as_printed=True`` uses +2(1-z^4)/(1-z^6) in the bracket instead, the
    form obtained when the 1/(u-1) shift term enters with the wrong sign;
    that series is not even in z.
    """
    a = ratfunc_expand(RatPoly([1]), RatPoly([1, 0, 1]), N)
    if as_printed:
        b = ratfunc_expand(RatPoly([2, 0, 0, 0, -2]), RatPoly([1, 0, 0, 0, 0, 0, -1]), N)
    else:
        b = ratfunc_expand(RatPoly([0, -2, 0, 2]), RatPoly([1, 0, 0, 0, 0, 0, -1]), N)
    z = TruncSeries([0, 1], N)
    return -expand_V(N) / 2 - z * (a + b) / 4


def even_genfun_check(N: int, as_printed: bool = False) -> VerifyReport:
    """sum_n B*_2n z^2n against the closed form built from V(z)."""
    if N < 2:
        raise ValueError("N must be >= 2")
    z = _zagier()
    bracket = "2(1-z^4)/(1-z^6)" if as_printed else "- 2z(1-z^2)/(1-z^6)"
    rep = VerifyReport("even_genfun", (0, N))
    with rep.timed():
        c = rep.check(
            f"sum B*_2n z^2n = -V/2 - (z/4)[1/(z^2+1) {'+ ' if as_printed else ''}{bracket}]",
            "generating function connecting B*_2n and v_n",
        )
        rhs = even_genfun_rhs(N, as_printed)
        for e in range(N + 1):
            want = z.bstar(e) if e and e % 2 == 0 else Fraction(0)
            c.record(rhs[e] == want, exponent=e, rhs=rhs[e], lhs=want)
    return rep


def _ipoly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def mod8_rhs(N: int) -> ModSeries:
    """2/(1-x) - x(1+x)(1+x^2)/(1-x)^5 + 3 R_2(x) - 2 R_3(x), reduced mod 8.

    R_2, R_3 are the closed forms of the second and third binomial sums.
    """
    m = 8
    one_minus_x5 = [1]
    for _ in range(5):
        one_minus_x5 = _ipoly_mul(one_minus_x5, [1, -1])
    t1 = ModSeries.from_ratfunc([2], [1, -1], m, N)
    t2 = ModSeries.from_ratfunc(_ipoly_mul(_ipoly_mul([0, 1], [1, 1]), [1, 0, 1]), one_minus_x5, m, N)
    t3 = ModSeries.from_ratfunc(_ipoly_mul([1, -2], [2, -2, 1]), _ipoly_mul([1, -1, 1], [1, -3, 1]), m, N)
    t4 = ModSeries.from_ratfunc([2, -6, 7, -2], [1, -4, 7, -4, 1], m, N)
    return t1 - t2 + 3 * t3 - 2 * t4


def mod8_stream(N: int) -> list[int]:
    """4 n B*_n mod 8 for n = 0..N, with the constant term 4 at n = 0."""
    z = _zagier()
    return [4] + [reduce_mod_2k(4 * n * z.bstar(n), 3) for n in range(1, N + 1)]


MOD8_EVEN_NUMER = (0, 3, 1, 6, 1, 3, 4)
MOD8_EVEN_DENOM = (1, 0, 0, 0, 0, 0, -1)


def mod8_genfun_check(N: int) -> VerifyReport:
    """4 n B*_n mod 8: rational-function match, period 24, and the even part.

    The even part is indexed by n: sum_n (8 n B*_2n mod 8) x^n equals
    x(3 + x + 6x^2 + x^3 + 3x^4 + 4x^5)/(1 - x^6).
    """
    if N < 48:
        raise ValueError("N must be >= 48")
    z = _zagier()
    rep = VerifyReport("period24", (1, N))
    with rep.timed():
        c_rf = rep.check(
            "4 + sum 4nB*_n x^n = 2/(1-x) - x(1+x)(1+x^2)/(1-x)^5 + 3R_2 - 2R_3 (mod 8)",
            "mod-8 reduction of 4nB*_n as a rational function",
        )
        stream = mod8_stream(N)
        rhs = mod8_rhs(N)
        for n in range(N + 1):
            c_rf.record(stream[n] == rhs[n], n=n, lhs=stream[n], rhs=rhs[n])
        c_per = rep.check("4nB*_n mod 8 has period 24", "coefficients mod 8 are periodic with period 24")
        period = detect_period(stream[1:], 2)
        c_per.record(period == 24, period=period, length=N)
        c_even = rep.check(
            "8nB*_2n mod 8 = [x^n] x(3+x+6x^2+x^3+3x^4+4x^5)/(1-x^6)",
            "even part of the mod-8 series",
        )
        even = ModSeries.from_ratfunc(MOD8_EVEN_NUMER, MOD8_EVEN_DENOM, 8, N // 2)
        for n in range(1, N // 2 + 1):
            got = reduce_mod_2k(8 * n * z.bstar(2 * n), 3)
            c_even.record(got == even[n], n=n, lhs=got, rhs=even[n])
    return rep


def prop22_lhs(which: int, n: int) -> Fraction:
    """Coefficient of x^n in the left-hand sides of the three binomial-sum identities."""
    if n == 0:
        return Fraction(2)
    if which == 1:
        return sum((Fraction(binomial(n + k, 2 * k) * 2 * n, n + k) for k in range(n + 1)), Fraction(0))
    sign = -1 if which == 3 else 1
    return sum(
        (Fraction(sign**k * binomial(n + 2 * k, 4 * k) * 2 * n, n + 2 * k) for k in range(n // 2 + 1)),
        Fraction(0),
    )


PROP22_RHS = {
    1: (RatPoly([2, -3]), RatPoly([1, -3, 1])),
    2: (RatPoly([1, -2]) * RatPoly([2, -2, 1]), RatPoly([1, -1, 1]) * RatPoly([1, -3, 1])),
    3: (RatPoly([2, -6, 7, -2]), RatPoly([1, -4, 7, -4, 1])),
}


def prop22_check(N: int) -> VerifyReport:
    if N < 4:
        raise ValueError("N must be >= 4")
    rep = VerifyReport("prop22", (0, N))
    with rep.timed():
        for which, (num, den) in PROP22_RHS.items():
            c = rep.check(
                f"binomial-sum generating function {which} = {num} / ({den})",
                "binomial sums with rational closed-form generating functions",
            )
            ser = ratfunc_expand(num, den, N)
            for n in range(N + 1):
                lhs = prop22_lhs(which, n)
                c.record(lhs == ser[n], identity=which, n=n, lhs=lhs, rhs=ser[n])
    return rep
