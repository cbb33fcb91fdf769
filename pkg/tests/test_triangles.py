import json
import threading

import pytest

from hypident.exact_arith import double_factorial_odd, factorial, pow2
from hypident.factorial_basis import poly_eval
from hypident.hypergeom import lhs_direct
from hypident.identity import rhs_direct
from hypident.triangles import (
    IndexOutOfTriangle,
    Triangle,
    c_entry,
    c_entry_oracle,
    export_csv,
    export_json,
    l_entry_closed,
    l_entry_recurrence,
    l_poly,
    l_poly_from_series,
    r_entry,
    r_entry_closed,
    r_poly,
    triangle_row,
    vanishing_sum,
)


def test_c_entry_values():
    assert (c_entry(0, 1), c_entry(1, 1)) == (1, 1)
    assert [c_entry(k, 2) for k in range(3)] == [3, 4, 1]  # (1+x)(3+x)
    assert c_entry(0, 3) == 15


def test_c_recurrence_matches_product_expansion():
    for j in range(1, 31):
        for k in range(j + 1):
            assert c_entry(k, j) == c_entry_oracle(k, j), (k, j)


def test_r_entry_values():
    assert (r_entry(0, 1), r_entry(1, 1)) == (2, 1)
    assert r_entry(0, 2) == 12
    assert r_entry(1, 2) == 10  # 2*(2+1+1)*1 + 2


def test_r_entry_closed_values():
    assert r_entry_closed(1, 1) == 1
    assert r_entry_closed(1, 2) == 10  # 2*(4*1 + 1*1)
    assert r_entry_closed(2, 2) == 1


def test_l_entry_closed_values():
    assert l_entry_closed(0, 2) == 12  # (2j)!/j!
    assert l_entry_closed(1, 2) == 10  # 2*(C(4,3) + C(4,4))
    assert l_entry_closed(2, 2) == 1


def test_l_entry_recurrence_values():
    assert l_entry_recurrence(1, 1) == 1
    assert l_entry_recurrence(1, 2) == 10  # 8*L(1,1) + L(0,1)
    assert l_entry_recurrence(0, 3) == 120  # 6!/3!


def test_all_four_routes_agree():
    """R recurrence, R closed form, L closed form and L recurrence give one
    table (the acceptance suite pushes this to j = 60)."""
    for j in range(1, 26):
        for i in range(j + 1):
            v = r_entry(i, j)
            assert v == r_entry_closed(i, j) == l_entry_closed(i, j) == l_entry_recurrence(i, j), (i, j)


def test_marginals():
    for j in range(1, 20):
        assert r_entry(0, j) == pow2(j) * double_factorial_odd(j)
        assert c_entry(0, j) == double_factorial_odd(j)
        assert l_entry_closed(0, j) == factorial(2 * j) // factorial(j)
        assert r_entry(j, j) == c_entry(j, j) == l_entry_closed(j, j) == 1


def test_entries_strictly_positive():
    for j in range(1, 31):
        for i in range(j + 1):
            assert c_entry(i, j) > 0
            assert r_entry(i, j) > 0
            assert l_entry_closed(i, j) > 0


@pytest.mark.parametrize(
    "call",
    [
        lambda: c_entry(2, 1),
        lambda: c_entry(0, 0),
        lambda: r_entry(-1, 3),
        lambda: r_entry_closed(4, 3),
        lambda: l_entry_closed(1, 0),
        lambda: l_entry_recurrence(5, 2),
        lambda: vanishing_sum(0, 5),
        lambda: vanishing_sum(3, 2),
    ],
)
def test_out_of_triangle_rejected(call):
    with pytest.raises(IndexOutOfTriangle):
        call()


# -- polynomials ---------------------------------------------------------

def test_r_poly_coefficients():
    assert r_poly(1).coeffs == (2, 1)
    assert r_poly(2).coeffs == (12, 10, 1)


def test_l_poly_coefficients():
    assert l_poly(2).coeffs == (12, 10, 1)
    assert l_poly(2) == r_poly(2)


def test_l_poly_from_series_values():
    assert l_poly_from_series(1).coeffs == (2, 1)
    assert l_poly_from_series(2).coeffs == (12, 10, 1)
    assert poly_eval(l_poly_from_series(2), 1) == 22
    assert poly_eval(l_poly_from_series(2), 1) == lhs_direct(1, 2) // 2


def test_l_poly_from_series_matches_closed_form():
    for j in range(1, 31):
        assert l_poly_from_series(j) == l_poly(j), j


def test_r_poly_reproduces_binomial_sum():
    # 2^N * R_j(N) equals the brute-force binomial-product sum
    for j in range(1, 16):
        p = r_poly(j)
        for n in range(1, 31):
            assert pow2(n) * poly_eval(p, n) == rhs_direct(n, j), (n, j)


# -- the telescoping zero sum ---------------------------------------------

def test_vanishing_sum_examples():
    assert vanishing_sum(2, 2) == 0  # -4 + 4
    assert vanishing_sum(1, 3) == 0
    assert vanishing_sum(3, 5) == 0


def test_vanishing_sum_is_zero_everywhere():
    for j in range(1, 21):
        for i in range(1, j + 1):
            assert vanishing_sum(i, j) == 0, (i, j)


# -- exports ---------------------------------------------------------------

def test_export_csv():
    assert export_csv("R", 2) == "2,1\n12,10,1\n"
    assert export_csv("C", 1) == "1,1\n"
    assert export_csv("L", 2) == export_csv("R", 2)


def test_export_json():
    doc = json.loads(export_json("R", 3))
    assert doc["kind"] == "R"
    assert doc["max_level"] == 3
    assert doc["rows"][0] == ["2", "1"]
    assert doc["rows"][2] == ["120", "132", "24", "1"]
    assert all(isinstance(v, str) and v.isdigit() for row in doc["rows"] for v in row)


def test_triangle_row_kinds():
    assert triangle_row("C", 2) == (3, 4, 1)
    with pytest.raises(ValueError):
        triangle_row("Q", 2)
    with pytest.raises(IndexOutOfTriangle):
        triangle_row("R", 0)


# -- concurrency contract ---------------------------------------------------

def test_concurrent_growth_is_consistent():
    """Readers racing to grow a fresh table all observe the same rows a
    sequential build produces."""
    fresh = Triangle(
        "R",
        lambda j: pow2(j) * double_factorial_odd(j),
        lambda j, i: 2 * (2 * j + i + 1),
    )
    results: dict[int, tuple] = {}
    errors: list[BaseException] = []

    def reader(tid: int) -> None:
        try:
            values = tuple(fresh.entry(i, 80 + tid) for i in range(81 + tid))
            results[tid] = values
        except BaseException as exc:  # pragma: no cover - failure reporting
            errors.append(exc)

    threads = [threading.Thread(target=reader, args=(t,)) for t in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()

    assert not errors
    for tid, values in results.items():
        expected = tuple(r_entry(i, 80 + tid) for i in range(81 + tid))
        assert values == expected
