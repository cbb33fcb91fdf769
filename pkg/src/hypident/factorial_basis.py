"""Falling/rising factorials and polynomials over the falling-factorial basis.

The falling factorial is (x)_n = x(x-1)...(x-n+1), the rising factorial
x^(n) = x(x+1)...(x+n-1); both are 1 for n = 0. Polynomials are stored
exclusively in the falling basis (``FallingPoly``), because every identity
this package verifies is settled there; monomials and rising factorials
are converted on entry:

    x^k       = sum_i S(k, i) * (x)_i           (Stirling, second kind)
    x^(k)     = sum_i C(k-1, i-1) * k!/i! * (x)_i   (Lah coefficients)

Stirling numbers are produced by the triangular recurrence
S(k+1, i) = i*S(k, i) + S(k, i-1) with full-table memoization; closed
forms are reserved for the test oracles.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import zip_longest

from .exact_arith import binomial, factorial

__all__ = [
    "FallingPoly",
    "falling",
    "monomial_to_falling",
    "poly_add",
    "poly_eval",
    "poly_scale",
    "rising",
    "rising_to_falling",
    "stirling2",
]


def falling(a: int, n: int) -> int:
    """Falling factorial (a)_n = prod_{m=0}^{n-1} (a - m); 1 when n = 0."""
    if n < 0:
        raise ValueError(f"falling({a}, {n}): n must be >= 0")
    out = 1
    for m in range(n):
        out *= a - m
    return out


def rising(a: int, n: int) -> int:
    """Rising factorial a^(n) = prod_{m=0}^{n-1} (a + m); 1 when n = 0."""
    if n < 0:
        raise ValueError(f"rising({a}, {n}): n must be >= 0")
    out = 1
    for m in range(n):
        out *= a + m
    return out


class _StirlingTable:
    """Rows of Stirling-second-kind numbers, grown on demand under a lock.

    Row k holds S(k, 0..k). S(0,0) = 1, S(k,0) = 0 for k >= 1, and entries
    above the diagonal are 0 (queries, not storage).
    """

    def __init__(self) -> None:
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def entry(self, k: int, i: int) -> int:
        if i > k:
            return 0
        if k >= len(self._rows):
            self._grow_to(k)
        return self._rows[k][i]

    def _grow_to(self, k: int) -> None:
        with self._lock:
            while len(self._rows) <= k:
                prev = self._rows[-1]
                top = len(self._rows) - 1
                nxt = [0]
                nxt.extend(
                    i * (prev[i] if i <= top else 0) + prev[i - 1]
                    for i in range(1, top + 2)
                )
                self._rows.append(tuple(nxt))


_STIRLING = _StirlingTable()


def stirling2(k: int, i: int) -> int:
    """Stirling number of the second kind S(k, i).

    Counts partitions of a k-set into i nonempty blocks; 0 above the
    diagonal and for (i = 0, k >= 1), per the usual conventions.
    """
    if k < 0 or i < 0:
        raise ValueError(f"stirling2({k}, {i}): indices must be >= 0")
    return _STIRLING.entry(k, i)


@dataclass(frozen=True)
class FallingPoly:
    """Polynomial sum_i coeffs[i] * (x)_i over the falling-factorial basis.

    The zero polynomial is the empty coefficient tuple; otherwise the
    trailing (highest-index) coefficient is nonzero. Trailing zeros are
    trimmed on construction, so equal polynomials compare equal.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1


def poly_eval(p: FallingPoly, x: int) -> int:
    """Evaluate p at the integer point x, exactly."""
    total = 0
    ff = 1
    for i, c in enumerate(p.coeffs):
        total += c * ff
        ff *= x - i
    return total


def poly_add(p: FallingPoly, q: FallingPoly) -> FallingPoly:
    """Coefficient-wise sum."""
    return FallingPoly(
        tuple(a + b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0))
    )


def poly_scale(p: FallingPoly, c: int) -> FallingPoly:
    """Scale every coefficient by c."""
    return FallingPoly(tuple(c * a for a in p.coeffs))


def monomial_to_falling(k: int) -> FallingPoly:
    """The monomial x^k expressed in the falling basis.

    Coefficient of (x)_i is S(k, i); for k = 0 this is the constant 1.
    """
    if k < 0:
        raise ValueError(f"monomial_to_falling({k}): k must be >= 0")
    return FallingPoly(tuple(stirling2(k, i) for i in range(k + 1)))


def rising_to_falling(k: int) -> FallingPoly:
    """The rising factorial x^(k) expressed in the falling basis.

    Coefficient of (x)_i is C(k-1, i-1) * k!/i! for 1 <= i <= k; for k = 0
    this is the constant 1.
    """
    if k < 0:
        raise ValueError(f"rising_to_falling({k}): k must be >= 0")
    if k == 0:
        return FallingPoly((1,))
    fact_k = factorial(k)
    coeffs = [0]
    coeffs.extend(
        binomial(k - 1, i - 1) * (fact_k // factorial(i)) for i in range(1, k + 1)
    )
    return FallingPoly(tuple(coeffs))
