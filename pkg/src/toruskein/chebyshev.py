"""Chebyshev polynomials of the first kind and the power <-> T-basis conversion.

The normalization used throughout is T_0 = 2, T_1 = X, T_n = X*T_{n-1} - T_{n-2}
(monic for n >= 1), which is the one satisfying T_n(x + x^-1) = x^n + x^-n.
Conversions keep integer coefficients by expressing the constant part against
the generator 1 rather than T_0 = 2.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .laurent import LaurentPoly

IntPoly = tuple[int, ...]  # coefficients, index = power of the indeterminate


@lru_cache(maxsize=None)
def chebyshev_t(n: int) -> IntPoly:
    """Coefficient tuple of the n-th first-kind Chebyshev polynomial."""
    if n < 0:
        raise ValueError("Chebyshev index must be >= 0")
    if n == 0:
        return (2,)
    prev: IntPoly = (2,)
    cur: IntPoly = (0, 1)
    for _ in range(n - 1):
        shifted = (0,) + cur
        nxt = tuple(s - p for s, p in zip(shifted, prev + (0,) * (len(shifted) - len(prev))))
        prev, cur = cur, nxt
    return cur


def power_to_chebyshev(n: int) -> dict[int, int]:
    """Integer coefficients c with X^n = sum_{k>=1} c[k]*T_k + c[0]*1.

    Regrouping the binomial expansion of (x + x^-1)^n by the pairs
    x^k + x^-k gives c[k] = C(n, (n-k)/2) for k >= 1 with k = n (mod 2), and
    c[0] = C(n, n/2) for even n (the unpaired middle term, counted against 1).
    """
    if n < 0:
        raise ValueError("power must be >= 0")
    out: dict[int, int] = {}
    for k in range(n, 0, -2):
        out[k] = comb(n, (n - k) // 2)
    if n % 2 == 0:
        out[0] = comb(n, n // 2)
    return out


def evaluate_laurent(poly: IntPoly, value: LaurentPoly) -> LaurentPoly:
    """Substitute a Laurent polynomial for the indeterminate (Horner)."""
    result = LaurentPoly.zero()
    for coeff in reversed(poly):
        result = result * value + coeff
    return result
