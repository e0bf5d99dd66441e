import random
from fractions import Fraction as Q
from math import comb

import pytest

from riordan import exact
from riordan.arrays import (DIAGONAL, EXPONENTIAL, ROW, SQUARE, RiordanArray,
                            lagrange_pair, table_row)
from riordan.fps import DomainError, Poly, Series
from riordan.genlagrange import gen_binomial_series


def pascal(order):
    geo = Series.geometric(order)
    return RiordanArray(geo, Series.x(order) / Series.from_poly([1, -1], order))


def rand_series(rng, order, first=None):
    coeffs = [Q(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(order + 1)]
    if first is not None:
        coeffs[0] = Q(first)
    return Series(coeffs, order)


def rand_proper(rng, order):
    f = rand_series(rng, order, first=rng.choice([1, -1, 2]))
    g = rand_series(rng, order)
    g.coeffs[0] = Q(0)
    g.coeffs[1] = Q(rng.choice([1, -1, 2]), rng.randint(1, 2))
    return RiordanArray(f, g)


def test_pascal_row():
    assert list(pascal(8).row(3)) == [1, 3, 3, 1]
    assert list(pascal(8).materialize(ROW, 3)) == [1, 3, 3, 1]


def test_exponential_pascal_row():
    pe = RiordanArray(Series.x(8).exp(), Series.x(8), EXPONENTIAL)
    assert list(pe.row(3)) == [1, 3, 3, 1]
    for n in range(6):
        assert list(pe.row(n)) == [comb(n, m) for m in range(n + 1)]


def test_catalan_derivative_triangle_rows():
    order = 10
    cat = gen_binomial_series(2, 1, order + 1)
    arr = RiordanArray(cat.mul_x().derivative().truncate(order),
                       cat.mul_x().truncate(order))
    want = [[1], [2, 1], [6, 3, 1], [20, 10, 4, 1]]
    for n, row in enumerate(want):
        assert list(arr.row(n)) == row


def test_flavor_bridge():
    rng = random.Random(2)
    arr = rand_proper(rng, 8)
    arr_e = RiordanArray(arr.f, arr.g, EXPONENTIAL)
    for n in range(9):
        for m in range(n + 1):
            weight = Q(exact.falling(n, n - m))  # n!/m!
            assert arr_e.entry(n, m) == weight * arr.entry(n, m)


def test_square_bridge():
    rng = random.Random(4)
    b = rand_series(rng, 8, first=2)
    a = rand_series(rng, 8, first=1)
    square = RiordanArray(b, a, SQUARE)
    tri = RiordanArray(b, a.mul_x().truncate(8))
    for n in range(9):
        d = tri.materialize(DIAGONAL, n).entries
        assert square.row(n).entries[: len(d)] == d


def test_group_product_pascal_square():
    p = pascal(10)
    got = p * p
    two = Series.from_poly([1, -2], 10)
    assert got.f == Series.one(10) / two
    assert got.g == Series.x(10) / two


def test_product_with_identity_and_inverse():
    rng = random.Random(9)
    arr = rand_proper(rng, 8)
    ident = RiordanArray.identity(8)
    prod = arr * ident
    assert prod.f == arr.f and prod.g == arr.g
    inv = arr.inverse()
    round_trip = arr * inv
    assert round_trip.f == Series.one(8)
    assert round_trip.g == Series.x(8)


def test_group_associativity_random():
    rng = random.Random(13)
    for _ in range(5):
        a, b, c = (rand_proper(rng, 8) for _ in range(3))
        lhs = (a * b) * c
        rhs = a * (b * c)
        assert lhs.f == rhs.f and lhs.g == rhs.g


def test_mutually_inverse_substitutions():
    order = 10
    lhs = RiordanArray(Series.one(order),
                       Series.x(order) / Series.from_poly([1, -1], order))
    rhs = RiordanArray(Series.one(order),
                       Series.x(order) / Series.from_poly([1, 1], order))
    prod = lhs * rhs
    assert prod.f == Series.one(order)
    assert prod.g == Series.x(order)
    inv = lhs.inverse()
    assert inv.g == rhs.g


def test_pascal_inverse_matches_power_formula():
    p = pascal(9)
    inv = p.inverse()
    minus = Series.from_poly([1, 1], 9)
    assert inv.f == Series.one(9) / minus
    assert inv.g == Series.x(9) / minus


def test_reversion_pair_inverse():
    arr = RiordanArray(Series.one(9), Series.from_poly([0, 1, -1], 9))
    inv = arr.inverse()
    cat = gen_binomial_series(2, 1, 8)
    assert inv.g == cat.mul_x()


def test_flavor_mismatch_raises():
    a = pascal(6)
    b = RiordanArray(Series.x(6).exp(), Series.x(6), EXPONENTIAL)
    with pytest.raises(DomainError):
        a * b


def test_sheffer_rows():
    pe = RiordanArray(Series.x(8).exp(), Series.x(8), EXPONENTIAL)
    assert pe.sheffer_row(2) == Poly([1, 2, 1], 2)
    rising = RiordanArray(Series.one(8), Series.geometric(8).log(), EXPONENTIAL)
    assert rising.sheffer_row(2) == Poly([0, 1, 1], 2)
    for n in range(5):
        assert rising.sheffer_row(n) == exact.rising_poly(n).with_bound(n)


def test_sheffer_even_square_case():
    order = 12
    half = Series.from_poly([1, 0, Q(1, 4)], order).sqrt()
    g = half + Series.from_poly([0, Q(1, 2)], order)
    a = g * g
    arr = RiordanArray(Series.one(order), a.log(), EXPONENTIAL)
    assert arr.sheffer_row(4) == Poly([0, 0, -1, 0, 1], 4)  # x^2(x^2-1)


def test_sheffer_requires_exponential():
    with pytest.raises(DomainError):
        pascal(6).sheffer_row(2)


def test_materialize_range_errors():
    from riordan.fps import RangeError
    p = pascal(6)
    with pytest.raises(RangeError):
        p.row(7)
    with pytest.raises(RangeError):
        p.column(7)
    with pytest.raises(RangeError):
        p.diagonal(7)


def test_lagrange_pair_basics():
    assert lagrange_pair(Series.from_poly([1, 1], 8)) == Series.geometric(8)
    assert lagrange_pair(Series.from_poly([1, -1], 8)) == (
        Series.one(8) / Series.from_poly([1, 1], 8))


def test_lagrange_pair_exponential():
    # b_n = (n+1)^(n-1)/n!
    from math import factorial
    ex = Series.x(9).exp()
    b = lagrange_pair(ex)
    assert b.coeffs[0] == 1
    for n in range(1, 10):
        assert b.coeffs[n] == Q((n + 1) ** (n - 1), factorial(n))


def test_table_row_v_zero():
    rng = random.Random(21)
    b = rand_series(rng, 8, first=1)
    a = rand_series(rng, 8, first=1)
    got = table_row(b, a, Q(1, 2), 0, 3, 8)
    assert got == b * a.pow(Q(3, 2))


def test_table_row_matches_diagonal_re_reading():
    # entry n of the once-re-read row k is entry n of original row k+n
    rng = random.Random(25)
    b = rand_series(rng, 10, first=2)
    a = rand_series(rng, 10, first=1)
    phi = Q(1)
    for k in range(-3, 4):
        row = table_row(b, a, phi, 1, k, 7)
        want = Series([(b * a.pow(phi * (k + n))).coeffs[n] for n in range(8)], 7)
        assert row == want


def test_table_row_round_trip():
    rng = random.Random(29)
    from riordan.genlagrange import gen_lagrange_series
    b = rand_series(rng, 10, first=1)
    a = rand_series(rng, 10, first=1)
    phi = Q(2)
    for v in (1, -1):
        image_b = table_row(b, a, phi, v, 0, 8)
        image_a = gen_lagrange_series(a, v * phi, 9)
        for k in (-2, 0, 1, 3):
            back = table_row(image_b, image_a, phi, -v, k, 8)
            assert back == (b * a.pow(phi * k)).truncate(8)
