"""Both sides of the central identity, plus the map-count evaluator.

The identity, for integers N >= 1 and j >= 1:

    j! 2^N C(N+j-1, j) 2F1(-j, -2j; -N-j+1; -1)
        = sum_{l=0}^{N} C(N, l) prod_{i=0}^{j-1} 2(2i+1+l).

Each side has a brute-force route (``lhs_direct`` in ``hypergeom``,
``rhs_direct`` here) and a fast route through the falling-basis
polynomials (``lhs_fast``/``rhs_fast`` evaluate 2^N L_j(N) and
2^N R_j(N)). ``check_identity`` compares any combination and reports the
outcome; an unequal pair is a result, never an exception.

The j = 0 boundary is accepted as a harmless extension (both sides
collapse to 2^N). N = 0 is rejected: there the hypergeometric side's
denominator parameters are genuinely invalid, and no regularized value is
defined.

``map_count`` evaluates the genus-g count of 2*nu-valent two-leg maps with
j vertices,

    j! [2 nu (nu-1) C(2nu-1, nu-1)]^j
        * sum_{l=0}^{3g-1} a_l C(2g-2+l+j, j)
              2F1(-j, -nu*j; 2-2g-l-j; 1/(1-nu)),

where the 3g weights a_l are supplied by the caller (typically from a JSON
coefficient file; this package never fabricates them). ``map_summand``
exposes one weightless term of that sum, and ``summand_equivalence``
checks the nu = 2 statement that ties each term back to the identity with
N = 2g-1+l.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .exact_arith import ExactRat, binomial, factorial, pow2
from .factorial_basis import falling, poly_eval
from .hypergeom import Hyp2F1Spec, hyp2f1_terminating, lhs_direct
from .triangles import l_poly, r_poly

__all__ = [
    "CoefficientLengthMismatch",
    "IdentityPoint",
    "MapCountSpec",
    "VerifyReport",
    "binomial_falling_sum",
    "check_identity",
    "lhs_direct",
    "lhs_fast",
    "map_count",
    "map_summand",
    "mapcount_spec_from_file",
    "mapcount_spec_from_obj",
    "rhs_direct",
    "rhs_fast",
    "summand_equivalence",
]

CheckMode = Literal["direct", "fast", "cross"]


class CoefficientLengthMismatch(ValueError):
    """Coefficient vector length differs from the required 3g."""


@dataclass(frozen=True)
class IdentityPoint:
    """One (N, j) evaluation point. N >= 1; j >= 0 (j = 0 is the extension)."""

    N: int
    j: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError(
                f"N = {self.N} is outside the identity's domain (N >= 1); "
                "no value is defined at N = 0"
            )
        if self.j < 0:
            raise ValueError(f"j = {self.j} must be >= 0")


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one identity check: both side values, verdict, timing."""

    point: IdentityPoint
    lhs: int
    rhs: int
    equal: bool
    elapsed: float  # seconds


def _require_point(N: int, j: int) -> None:
    IdentityPoint(N, j)


def rhs_direct(N: int, j: int) -> int:
    """The binomial sum side, term by term: sum_l C(N,l) prod_i 2(2i+1+l)."""
    _require_point(N, j)
    total = 0
    for l in range(N + 1):
        prod = 1
        for i in range(j):
            prod *= 2 * (2 * i + 1 + l)
        total += binomial(N, l) * prod
    return total


def rhs_fast(N: int, j: int) -> int:
    """The binomial sum side via its falling-basis polynomial: 2^N R_j(N)."""
    _require_point(N, j)
    if j == 0:
        return pow2(N)
    return pow2(N) * poly_eval(r_poly(j), N)


def lhs_fast(N: int, j: int) -> int:
    """The hypergeometric side via its falling-basis polynomial: 2^N L_j(N)."""
    _require_point(N, j)
    if j == 0:
        return pow2(N)
    return pow2(N) * poly_eval(l_poly(j), N)


def binomial_falling_sum(N: int, i: int) -> int:
    """sum_{l=0}^{N} C(N,l) (l)_i, in closed form: 2^{N-i} (N)_i."""
    if N < 1:
        raise ValueError(f"binomial_falling_sum(N={N}, i={i}): N must be >= 1")
    if not 0 <= i <= N:
        raise ValueError(f"binomial_falling_sum(N={N}, i={i}): need 0 <= i <= N")
    return pow2(N - i) * falling(N, i)


def check_identity(point: IdentityPoint, mode: CheckMode = "fast") -> VerifyReport:
    """Evaluate both sides at ``point`` and report whether they agree.

    mode "direct" compares the two brute-force routes, "fast" the two
    polynomial routes, and "cross" all four pairwise. Inequality is
    reported, not raised.
    """
    start = time.perf_counter()
    if mode == "direct":
        lhs = lhs_direct(point.N, point.j)
        rhs = rhs_direct(point.N, point.j)
        equal = lhs == rhs
    elif mode == "fast":
        lhs = lhs_fast(point.N, point.j)
        rhs = rhs_fast(point.N, point.j)
        equal = lhs == rhs
    elif mode == "cross":
        lhs = lhs_direct(point.N, point.j)
        rhs = rhs_direct(point.N, point.j)
        equal = lhs == lhs_fast(point.N, point.j) == rhs_fast(point.N, point.j) == rhs
    else:
        raise ValueError(f"unknown mode {mode!r}; expected direct, fast or cross")
    return VerifyReport(point, lhs, rhs, equal, time.perf_counter() - start)


def map_summand(g: int, l: int, j: int, nu: int) -> Fraction:
    """One weightless term of the map-count sum.

    C(2g-2+l+j, j) * 2F1(-j, -nu*j; 2-2g-l-j; 1/(1-nu)), exact. The
    denominator parameter stays strictly negative over the whole
    terminating range whenever g >= 1 and l >= 0, so the series is always
    well defined here.
    """
    if g < 1:
        raise ValueError(f"map_summand: g = {g} must be >= 1")
    if not 0 <= l <= 3 * g - 1:
        raise ValueError(f"map_summand: l = {l} must satisfy 0 <= l <= 3g-1 = {3 * g - 1}")
    if j < 1:
        raise ValueError(f"map_summand: j = {j} must be >= 1")
    if nu < 2:
        raise ValueError(f"map_summand: nu = {nu} must be >= 2")
    series = hyp2f1_terminating(
        Hyp2F1Spec(-j, -nu * j, 2 - 2 * g - l - j, Fraction(1, 1 - nu))
    )
    return binomial(2 * g - 2 + l + j, j) * series


def summand_equivalence(g: int, l: int, j: int) -> bool:
    """Does the nu = 2 summand match its hypergeometric-free form?

    With N = 2g-1+l, the claim is j! * map_summand(g,l,j,2) * 2^N equal to
    the binomial sum side at (N, j).
    """
    N = 2 * g - 1 + l
    return factorial(j) * map_summand(g, l, j, 2) * pow2(N) == rhs_direct(N, j)


@dataclass(frozen=True)
class MapCountSpec:
    """Inputs for one map count: half-valence nu, genus g, vertices j,
    and the 3g externally supplied weights a."""

    nu: int
    g: int
    j: int
    a: tuple[ExactRat, ...]

    def __post_init__(self) -> None:
        if self.nu < 2:
            raise ValueError(f"nu = {self.nu} must be >= 2")
        if self.g < 1:
            raise ValueError(f"g = {self.g} must be >= 1")
        if self.j < 1:
            raise ValueError(f"j = {self.j} must be >= 1")
        weights = tuple(Fraction(x) for x in self.a)
        if len(weights) != 3 * self.g:
            raise CoefficientLengthMismatch(
                f"need 3g = {3 * self.g} coefficients, got {len(weights)}"
            )
        object.__setattr__(self, "a", weights)


def map_count(spec: MapCountSpec) -> Fraction:
    """Evaluate the map-count formula for the given spec, exactly.

    Linear in the weight vector; returns a Fraction (an integer value only
    when the supplied weights are the true ones, which this package does
    not assert).
    """
    prefactor = factorial(spec.j) * (
        2 * spec.nu * (spec.nu - 1) * binomial(2 * spec.nu - 1, spec.nu - 1)
    ) ** spec.j
    total = sum(
        (w * map_summand(spec.g, l, spec.j, spec.nu) for l, w in enumerate(spec.a)),
        start=Fraction(0),
    )
    return prefactor * total


def mapcount_spec_from_obj(obj: object, j: int) -> MapCountSpec:
    """Build a MapCountSpec from a decoded coefficient-file object.

    Expected shape: {"nu": int, "g": int, "a": [entries]} where each entry
    is an exact rational as a string ("7", "-3/4") or a JSON integer.
    Anything else is a ValueError with a pointer at the offending entry.
    """
    if not isinstance(obj, dict):
        raise ValueError("coefficient file must contain a JSON object")
    missing = [key for key in ("nu", "g", "a") if key not in obj]
    if missing:
        raise ValueError(f"coefficient file is missing key(s): {', '.join(missing)}")
    nu, g, entries = obj["nu"], obj["g"], obj["a"]
    if not isinstance(nu, int) or isinstance(nu, bool):
        raise ValueError(f"'nu' must be an integer, got {nu!r}")
    if not isinstance(g, int) or isinstance(g, bool):
        raise ValueError(f"'g' must be an integer, got {g!r}")
    if not isinstance(entries, list):
        raise ValueError("'a' must be an array of rational strings")
    return MapCountSpec(nu=nu, g=g, j=j, a=tuple(
        _parse_rational(entry, idx) for idx, entry in enumerate(entries)
    ))


def _parse_rational(entry: object, idx: int) -> Fraction:
    if isinstance(entry, bool):
        raise ValueError(f"a[{idx}]: booleans are not rationals")
    if isinstance(entry, int):
        return Fraction(entry)
    if isinstance(entry, str):
        try:
            return Fraction(entry)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"a[{idx}]: malformed rational {entry!r} ({exc})") from None
    raise ValueError(f"a[{idx}]: expected a rational string or integer, got {entry!r}")


def mapcount_spec_from_file(path: str, j: int) -> MapCountSpec:
    """Load and validate a JSON coefficient file (see mapcount_spec_from_obj)."""
    with open(path, encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from None
    return mapcount_spec_from_obj(raw, j)
