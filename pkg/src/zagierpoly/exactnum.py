"""Exact integer/rational primitives: binomials, p-adic valuations, 2-adic reduction.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "INFINITE",
    "binomial",
    "binomial_row",
    "denom",
    "factorize",
    "is_prime",
    "nu_p",
    "primes_up_to",
    "reduce_mod_2k",
]

#: Valuation of zero. Compares above every integer and absorbs addition.
INFINITE = math.inf


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with C(n, k) = 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=1024)
def binomial_row(n: int) -> tuple[int, ...]:
    """Row n of Pascal's triangle, built by the running product."""
    row = [1]
    c = 1
    for k in range(1, n + 1):
        c = c * (n - k + 1) // k
        row.append(c)
    return tuple(row)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, n + 1, p))
    return [i for i, v in enumerate(sieve) if v]


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def nu_p(q: Rational | int, p: int) -> int | float:
    """Exponent of the prime p in q; INFINITE for q = 0."""
    if not is_prime(p):
        raise ValueError(f"nu_p needs a prime, got {p}")
    q = Fraction(q)
    if q == 0:
        return INFINITE
    return _int_valuation(abs(q.numerator), p) - _int_valuation(q.denominator, p)


def reduce_mod_2k(q: Rational | int, k: int) -> int:
    """Residue of a 2-integral rational modulo 2**k."""
    if k < 1:
        raise ValueError("k must be positive")
    q = Fraction(q)
    if q.denominator % 2 == 0:
        raise ValueError(f"{q} is not 2-integral")
    m = 1 << k
    return q.numerator * pow(q.denominator, -1, m) % m


def denom(q: Rational | int) -> int:
    return Fraction(q).denominator
