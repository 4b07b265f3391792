from fractions import Fraction
from math import gcd as math_gcd

import pytest
from hypothesis import given, strategies as st

from ratapprox.arith import (
    NotInvertible,
    ext_gcd,
    floor_scaled_root,
    gcd,
    iroot,
    mod_inv,
    parse_rational,
    sum_terms,
)

big = st.integers(min_value=-(2 ** 256), max_value=2 ** 256)


@pytest.mark.parametrize("x, y, g", [(0, 5, 5), (12, 18, 6), (7, 13, 1), (0, 0, 0), (-12, 18, 6)])
def test_gcd(x, y, g):
    assert gcd(x, y) == g


@pytest.mark.parametrize("x, y, expected", [
    (240, 46, (2, -9, 47)),
    (1, 5, (1, 1, 0)),
    (6, 0, (6, 1, 0)),
])
def test_ext_gcd_examples(x, y, expected):
    assert ext_gcd(x, y) == expected
    g, u, v = expected
    assert u * x + v * y == g


def test_ext_gcd_zero_zero():
    with pytest.raises(ValueError):
        ext_gcd(0, 0)


@given(big, big)
def test_ext_gcd_bezout(x, y):
    if x == 0 and y == 0:
        return
    g, u, v = ext_gcd(x, y)
    assert g == math_gcd(x, y)
    assert u * x + v * y == g


@pytest.mark.parametrize("x, m, y", [(3, 5, 2), (47, 101, 43), (5, 1, 0), (-3, 5, 3)])
def test_mod_inv(x, m, y):
    assert mod_inv(x, m) == y


def test_mod_inv_not_invertible():
    with pytest.raises(NotInvertible) as info:
        mod_inv(2, 4)
    assert info.value.gcd == 2


@given(big, st.integers(min_value=1, max_value=2 ** 200))
def test_mod_inv_property(x, m):
    try:
        y = mod_inv(x, m)
    except NotInvertible as exc:
        assert exc.gcd == math_gcd(x, m) > 1
        return
    assert 0 <= y < m
    assert (x * y) % m == 1 % m


def test_sum_terms_examples():
    assert sum_terms([Fraction(2, 5), Fraction(-1, 2), Fraction(1, 9)]) == Fraction(1, 90)
    assert sum_terms([]) == Fraction(0, 1)
    assert sum_terms([(1, 3), (-1, 3)]) == 0


@given(st.lists(st.tuples(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 6)), max_size=8))
def test_sum_terms_common_denominator(pairs):
    den = 1
    for _, d in pairs:
        den *= d
    num = sum(a * (den // d) for a, d in pairs)
    got = sum_terms(pairs)
    assert got.numerator * den == num * got.denominator
    assert math_gcd(got.numerator, got.denominator) == 1
    # reducing an already reduced value changes nothing
    assert Fraction(got.numerator, got.denominator) == got


def _root_by_search(Q, n, c):
    u, v = c.numerator, c.denominator
    R = 0
    while ((R + 1) * v) ** n <= u ** n * Q:
        R += 1
    return R


@pytest.mark.parametrize("Q, n, c, R", [
    (25600, 3, Fraction(2), 58),
    (1, 3, Fraction(2), 2),
    (1000000, 4, Fraction(2), 63),
])
def test_floor_scaled_root_examples(Q, n, c, R):
    assert floor_scaled_root(Q, n, c) == R
    assert _root_by_search(Q, n, c) == R


@given(st.integers(1, 10 ** 6), st.integers(2, 5),
       st.fractions(min_value=Fraction(51, 50), max_value=4, max_denominator=50))
def test_floor_scaled_root_bracket(Q, n, c):
    R = floor_scaled_root(Q, n, c)
    u, v = c.numerator, c.denominator
    assert (R * v) ** n <= u ** n * Q < ((R + 1) * v) ** n


def test_floor_scaled_root_brute_force_small():
    for Q in range(1, 400):
        for n in (2, 3, 4):
            for c in (Fraction(2), Fraction(3, 2), Fraction(7, 5)):
                assert floor_scaled_root(Q, n, c) == _root_by_search(Q, n, c)


@pytest.mark.parametrize("c", [Fraction(1), Fraction(1, 2), Fraction(0)])
def test_floor_scaled_root_rejects_small_c(c):
    with pytest.raises(ValueError):
        floor_scaled_root(100, 3, c)


@given(st.integers(0, 2 ** 300), st.integers(1, 7))
def test_iroot(x, n):
    r = iroot(x, n)
    assert r ** n <= x < (r + 1) ** n


def test_parse_rational():
    assert parse_rational("2") == 2
    assert parse_rational("3/2") == Fraction(3, 2)
    with pytest.raises(ValueError):
        parse_rational("abc")
