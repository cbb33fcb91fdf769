"""Exact integer/rational scalars shared by every other module.

All arithmetic in this package is exact: integers are Python's unbounded
``int``, rationals are ``fractions.Fraction`` (always canonical: positive
denominator, gcd-reduced, structural equality). The aliases ``ExactInt``
and ``ExactRat`` name those roles in signatures. No floats anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

ExactInt = int
ExactRat = Fraction

__all__ = [
    "ExactInt",
    "ExactRat",
    "binomial",
    "double_factorial_odd",
    "factorial",
    "pow2",
]


def binomial(n: int, k: int, *, extended: bool = False) -> int:
    """Binomial coefficient C(n, k) with zero-fill for out-of-range indices.

    Returns the ordinary coefficient for n >= k >= 0 and 0 whenever k < 0
    or k > n >= 0. With ``extended=True`` the single exceptional value
    C(-1, -1) = 1 is honored; that convention is needed by exactly one
    telescoping sum (see ``triangles.vanishing_sum``) and is flag-gated so
    it cannot leak into other call sites.

    Raises ValueError for negative n with k >= 0: no generalized
    (Pochhammer) extension is provided.
    """
    if extended and n == -1 and k == -1:
        return 1
    if k < 0:
        return 0
    if n < 0:
        raise ValueError(f"binomial({n}, {k}): negative n is not supported")
    if k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    """n! for n >= 0."""
    return math.factorial(n)


def double_factorial_odd(j: int) -> int:
    """Odd double factorial (2j-1)!! = 1 * 3 * ... * (2j-1); 1 for j = 0."""
    if j < 0:
        raise ValueError(f"double_factorial_odd({j}): j must be >= 0")
    out = 1
    for m in range(1, j + 1):
        out *= 2 * m - 1
    return out


def pow2(n: int) -> int:
    """2**n for n >= 0."""
    if n < 0:
        raise ValueError(f"pow2({n}): n must be >= 0")
    return 1 << n
