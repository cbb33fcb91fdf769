"""The three coefficient triangles and the polynomials they define.

Every table here is lower-triangular, indexed (i, j) with 0 <= i <= j and
level j >= 1, and determined by its marginals (index-0 column and diagonal)
plus a two-term recurrence:

  C(k, j): coefficient of x^k in prod_{i=0}^{j-1} (2i+1+x).
      C(0,j) = (2j-1)!!, C(j,j) = 1,
      C(k,j+1) = (2j+1) C(k,j) + C(k-1,j).
  R(i, j): falling-basis coefficients of the polynomial R_j with
      2^N R_j(N) = sum_l C(N,l) prod_i 2(2i+1+l)  (the binomial-sum side).
      R(0,j) = 2^j (2j-1)!!, R(j,j) = 1,
      R(i,j+1) = 2(2j+i+1) R(i,j) + R(i-1,j).
  L(i, j): falling-basis coefficients of the polynomial L_j with
      2^N L_j(N) equal to the hypergeometric side; closed form
      L(0,j) = (2j)!/j!,  L(i,j) = j!/i! sum_{k=i}^j C(2j, j+k) C(k-1, i-1).

R and L are provably the same table, but they are kept as separate objects
with independent construction routes on purpose: their entry-by-entry
equality (plus the recurrence/closed-form agreement within each family and
the companion ``vanishing_sum`` telescoping check) is the package's
principal verification target, so collapsing them would test nothing.

Construction is level-by-level with whole rows cached; random access to
(i, j) builds every row up to j. Rows grow under an internal lock and are
immutable once published, so concurrent readers only ever observe complete
rows.
"""

from __future__ import annotations

import json
import threading
from functools import lru_cache
from typing import Callable

from .exact_arith import binomial, double_factorial_odd, factorial, pow2
from .factorial_basis import FallingPoly, poly_add, poly_scale, rising_to_falling, stirling2

__all__ = [
    "IndexOutOfTriangle",
    "Triangle",
    "c_entry",
    "c_entry_oracle",
    "export_csv",
    "export_json",
    "l_entry_closed",
    "l_entry_recurrence",
    "l_poly",
    "l_poly_from_series",
    "r_entry",
    "r_entry_closed",
    "r_poly",
    "triangle_row",
    "vanishing_sum",
]


class IndexOutOfTriangle(ValueError):
    """Requested (i, j) lies outside the lower triangle (0 <= i <= j, j >= 1)."""


def _check_index(i: int, j: int, kind: str) -> None:
    if j < 1 or i < 0 or i > j:
        raise IndexOutOfTriangle(f"{kind}({i}, {j}): need 0 <= i <= j and j >= 1")


class Triangle:
    """Lazily grown lower-triangular table of exact integers.

    Level j+1 is filled from level j by
        next[i] = weight(j, i) * prev[i] + prev[i-1],   1 <= i <= j,
    with next[0] recomputed from the exact marginal function and the
    diagonal pinned to 1. Rows are cached whole and grown under a lock.
    """

    def __init__(
        self,
        kind: str,
        margin: Callable[[int], int],
        weight: Callable[[int, int], int],
    ) -> None:
        self.kind = kind
        self._margin = margin
        self._weight = weight
        self._rows: list[tuple[int, ...]] = [(), (margin(1), 1)]
        self._lock = threading.Lock()

    @property
    def max_level(self) -> int:
        return len(self._rows) - 1

    def entry(self, i: int, j: int) -> int:
        _check_index(i, j, self.kind)
        if j >= len(self._rows):
            self._grow_to(j)
        return self._rows[j][i]

    def row(self, j: int) -> tuple[int, ...]:
        """Entries (0..j, j), index-ascending."""
        _check_index(0, j, self.kind)
        if j >= len(self._rows):
            self._grow_to(j)
        return self._rows[j]

    def _grow_to(self, j: int) -> None:
        with self._lock:
            while len(self._rows) <= j:
                top = len(self._rows) - 1
                prev = self._rows[top]
                nxt = [self._margin(top + 1)]
                nxt.extend(
                    self._weight(top, i) * prev[i] + prev[i - 1]
                    for i in range(1, top + 1)
                )
                nxt.append(1)
                self._rows.append(tuple(nxt))


_C = Triangle("C", double_factorial_odd, lambda j, k: 2 * j + 1)
_R = Triangle(
    "R",
    lambda j: pow2(j) * double_factorial_odd(j),
    lambda j, i: 2 * (2 * j + i + 1),
)
# Same recurrence as R but seeded from the L marginals; backs
# l_entry_recurrence, whose whole point is that the marginals already
# pin down the table.
_L_REC = Triangle(
    "L",
    lambda j: factorial(2 * j) // factorial(j),
    lambda j, i: 2 * (2 * j + i + 1),
)


def c_entry(k: int, j: int) -> int:
    """C(k, j) by the level recurrence."""
    return _C.entry(k, j)


def c_entry_oracle(k: int, j: int) -> int:
    """C(k, j) by direct monomial-basis expansion of prod (2i+1+x).

    Independent of the recurrence path; intended for cross-checks.
    """
    _check_index(k, j, "C")
    poly = [1]
    for i in range(j):
        lin = (2 * i + 1, 1)
        out = [0] * (len(poly) + 1)
        for d, pd in enumerate(poly):
            out[d] += pd * lin[0]
            out[d + 1] += pd * lin[1]
        poly = out
    return poly[k]


def r_entry(i: int, j: int) -> int:
    """R(i, j) by the level recurrence from the R marginals."""
    return _R.entry(i, j)


def r_entry_closed(i: int, j: int) -> int:
    """R(i, j) by the Stirling-weighted closed form.

    2^{j-i} * sum_{k=i}^{j} C(k,j) S(k,i) for i >= 1; the i = 0 column is
    the 2^j (2j-1)!! marginal.
    """
    _check_index(i, j, "R")
    if i == 0:
        return pow2(j) * double_factorial_odd(j)
    return pow2(j - i) * sum(
        c_entry(k, j) * stirling2(k, i) for k in range(i, j + 1)
    )


def l_entry_closed(i: int, j: int) -> int:
    """L(i, j) by the binomial closed form.

    j!/i! * sum_{k=i}^{j} C(2j, j+k) C(k-1, i-1) for i >= 1; the i = 0
    column is (2j)!/j!.
    """
    _check_index(i, j, "L")
    if i == 0:
        return factorial(2 * j) // factorial(j)
    scale = factorial(j) // factorial(i)
    return scale * sum(
        binomial(2 * j, j + k) * binomial(k - 1, i - 1) for k in range(i, j + 1)
    )


def l_entry_recurrence(i: int, j: int) -> int:
    """L(i, j) by propagating the R recurrence from the L marginals.

    Exists as a third, independent route: if the L marginals plus the
    shared recurrence reproduce the closed form, the two tables are pinned
    to each other entry by entry.
    """
    return _L_REC.entry(i, j)


@lru_cache(maxsize=None)
def _l_closed_row(j: int) -> tuple[int, ...]:
    return tuple(l_entry_closed(i, j) for i in range(j + 1))


def r_poly(j: int) -> FallingPoly:
    """The degree-j falling-basis polynomial with coefficients R(., j)."""
    return FallingPoly(_R.row(j))


def l_poly(j: int) -> FallingPoly:
    """The degree-j falling-basis polynomial with coefficients L(., j)."""
    _check_index(0, j, "L")
    return FallingPoly(_l_closed_row(j))


def l_poly_from_series(j: int) -> FallingPoly:
    """L_j assembled term by term from its rising-factorial series.

    Sums C(j,k) * (2j)!/(j+k)! * x^(k) over k = 0..j, converting each
    rising factorial through the Lah transform. A construction route
    independent of both l_entry paths.
    """
    _check_index(0, j, "L")
    acc = FallingPoly(())
    fact_2j = factorial(2 * j)
    for k in range(j + 1):
        coeff = binomial(j, k) * (fact_2j // factorial(j + k))
        acc = poly_add(acc, poly_scale(rising_to_falling(k), coeff))
    return acc


def vanishing_sum(i: int, j: int) -> int:
    """The telescoping binomial sum that locks the L recurrence in place.

    For i >= 2 this is
        sum_{k=i-1}^{j} C(2j, j+k) * [ 2(i-1) C(k-1, i-1)
                                       + i C(k-1, i-2)
                                       - (j+1) C(k-2, i-3) ],
    where at i = 2 the k = i-1 term needs the extended convention
    C(-1,-1) = 1 (and C(k-2,-1) = 0 for k >= 2). For i = 1 the bracket
    degenerates under pure zero-fill, so the i = 1 reduction is used
    instead: (j+1)! * [C(2j, j) - C(2j, j+1)] - (2j)!/j!.

    Always 0; returning the computed value (rather than asserting) is the
    point, since tests check the zero exactly.
    """
    if j < 1 or i < 1 or i > j:
        raise IndexOutOfTriangle(f"vanishing_sum({i}, {j}): need 1 <= i <= j")
    if i == 1:
        reduced = binomial(2 * j, j) - binomial(2 * j, j + 1)
        return factorial(j + 1) * reduced - factorial(2 * j) // factorial(j)
    total = 0
    extended = i == 2
    for k in range(i - 1, j + 1):
        bracket = (
            2 * (i - 1) * binomial(k - 1, i - 1)
            + i * binomial(k - 1, i - 2)
            - (j + 1) * binomial(k - 2, i - 3, extended=extended)
        )
        total += binomial(2 * j, j + k) * bracket
    return total


_KINDS: dict[str, Callable[[int], tuple[int, ...]]] = {
    "C": _C.row,
    "R": _R.row,
    "L": lambda j: _l_closed_row(j),
}


def triangle_row(kind: str, j: int) -> tuple[int, ...]:
    """Row j of the named triangle (kind in {"C", "R", "L"}), index-ascending.

    The L row comes from the closed form; by the table equality it matches
    the recurrence route, which tests assert separately.
    """
    try:
        rows = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown triangle kind {kind!r}; expected C, R or L") from None
    return rows(j)


def export_csv(kind: str, j_max: int) -> str:
    """Rows 1..j_max as CSV: one line per level, exact decimal entries."""
    lines = [
        ",".join(str(v) for v in triangle_row(kind, j)) for j in range(1, j_max + 1)
    ]
    return "\n".join(lines) + "\n"


def export_json(kind: str, j_max: int) -> str:
    """Rows 1..j_max as a JSON object; entries are decimal digit strings."""
    rows = [
        [str(v) for v in triangle_row(kind, j)] for j in range(1, j_max + 1)
    ]
    return json.dumps({"kind": kind, "max_level": j_max, "rows": rows}, indent=2) + "\n"
