"""Independent reference computations used only by the tests."""

from fractions import Fraction
from math import factorial


def bernoulli_by_series(n_max):
    """B_0..B_n_max by inverting (e^t - 1)/t = sum t^k/(k+1)! as a power series."""
    a = [Fraction(1, factorial(k + 1)) for k in range(n_max + 1)]
    inv = [Fraction(0)] * (n_max + 1)
    inv[0] = Fraction(1)
    for k in range(1, n_max + 1):
        inv[k] = -sum(a[j] * inv[k - j] for j in range(1, k + 1))
    return [inv[k] * factorial(k) for k in range(n_max + 1)]


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


def chebyshev_T_explicit(n):
    """Coefficients of T_n from (n/2) sum_k (-1)^k (n-k-1)!/(k!(n-2k)!) (2x)^(n-2k)."""
    if n == 0:
        return [Fraction(1)]
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        c = Fraction(n * (-1) ** k * factorial(n - k - 1), 2 * factorial(k) * factorial(n - 2 * k))
        coeffs[n - 2 * k] += c * 2 ** (n - 2 * k)
    return coeffs


def nu2_int(m):
    v = 0
    while m % 2 == 0:
        m //= 2
        v += 1
    return v
