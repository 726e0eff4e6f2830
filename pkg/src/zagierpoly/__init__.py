"""Exact computations with Zagier's modified Bernoulli numbers B*_n.

Subpackages are plain modules: :mod:`exactnum` (rationals, valuations),
:mod:`classical` (Bernoulli numbers, congruences, Chebyshev polynomials),
:mod:`series` (truncated power and Laurent series), :mod:`zagier` (B*_n and
the Zagier polynomials), :mod:`vcoeff` (the asymptotic coefficients v_n) and
:mod:`cli`.
"""

from .classical import bernoulli_number, bernoulli_poly
from .report import VerifyReport
from .zagier import alpha, bstar, bstar_poly

__version__ = "0.1.0"

__all__ = ["VerifyReport", "alpha", "bernoulli_number", "bernoulli_poly", "bstar", "bstar_poly", "__version__"]
