import random
from fractions import Fraction as Q
from math import factorial

import pytest

from riordan import exact
from riordan.fps import DomainError, Poly, RangeError, Series, xdlog


def rand_series(rng, order, first=None):
    coeffs = [Q(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(order + 1)]
    if first is not None:
        coeffs[0] = Q(first)
    return Series(coeffs, order)


# -- ring operations ----------------------------------------------------------

def test_geometric_cancellation():
    n = 12
    assert Series.from_poly([1, -1], n) * Series.geometric(n) == Series.one(n)


def test_inverse_of_one_minus_x():
    assert Series.one(9) / Series.from_poly([1, -1], 9) == Series.geometric(9)


def test_square_of_one_plus_x():
    got = Series.from_poly([1, 1], 6) * Series.from_poly([1, 1], 6)
    assert got == Series.from_poly([1, 2, 1], 6)


def test_binary_ops_return_min_order():
    a = Series.geometric(9)
    b = Series.one(5)
    assert (a + b).order == 5
    assert (a * b).order == 5
    assert (a / b).order == 5


def test_division_by_nonunit_raises():
    with pytest.raises(DomainError):
        Series.one(4) / Series.x(4)


# -- composition and reversion -------------------------------------------------

def test_compose_geometric_with_mobius():
    f = Series.geometric(10)
    g = Series.x(10) / Series.from_poly([1, 1], 10)
    assert f.compose(g) == Series.from_poly([1, 1], 10)


def test_compose_with_x_is_identity():
    rng = random.Random(3)
    f = rand_series(rng, 8)
    assert f.compose(Series.x(8)) == f


def test_compose_exp_log():
    order = 8
    e = Series.x(order).exp()
    l = Series.from_poly([1, 1], order).log()
    assert e.compose(l) == Series.from_poly([1, 1], order)


def test_compose_requires_zero_constant():
    with pytest.raises(DomainError):
        Series.one(4).compose(Series.one(4))


def test_reversion_mobius():
    g = Series.x(10) / Series.from_poly([1, -1], 10)
    want = Series.x(10) / Series.from_poly([1, 1], 10)
    assert g.reversion() == want


def test_reversion_catalan():
    got = Series.from_poly([0, 1, -1], 8).reversion()
    assert got == Series([0, 1, 1, 2, 5, 14, 42, 132, 429], 8)


def test_reversion_x_exp_minus_x_against_composition():
    g = Series.x(10) * Series.from_poly([0, -1], 10).exp()
    r = g.reversion()
    assert g.truncate(9).compose(r.truncate(9)) == Series.x(9)
    assert r.coeffs[:5] == [Q(0), Q(1), Q(1), Q(3, 2), Q(8, 3)]


def test_reversion_round_trip_random():
    rng = random.Random(17)
    for _ in range(30):
        coeffs = [Q(0), Q(rng.choice([1, -1, 2, -2]), rng.randint(1, 2))]
        coeffs += [Q(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(9)]
        g = Series(coeffs, 10)
        r = g.reversion()
        assert g.compose(r) == Series.x(10)
        assert r.compose(g) == Series.x(10)


def test_reversion_needs_unit_linear_term():
    with pytest.raises(DomainError):
        Series.from_poly([0, 0, 1], 5).reversion()
    with pytest.raises(DomainError):
        Series.one(5).reversion()


def test_lagrange_coefficient_identity():
    # with b defined by (1, x/a)^{-1} = (1, x*b):
    # [x^n] b^m = m/(m+n) [x^n] a^(m+n)
    rng = random.Random(23)
    for _ in range(10):
        a = rand_series(rng, 8, first=1)
        b = a.inverse().mul_x().reversion().div_x()
        for m in range(1, 9):
            bm = b.pow(m)
            for n in range(0, 9 - m):
                want = Q(m, m + n) * a.pow(m + n).coeffs[n]
                assert bm.coeffs[n] == want


def test_lagrange_pair_built_from_coefficients():
    # building b directly out of the coefficient formula must give the
    # substitution inverse of x/a
    rng = random.Random(27)
    for _ in range(10):
        a = rand_series(rng, 9, first=1)
        xb = Series([Q(0)] + [Q(1, 1 + n) * a.pow(1 + n).coeffs[n]
                              for n in range(8)], 8)
        inner = (a.inverse().mul_x()).truncate(8)
        assert inner.compose(xb) == Series.x(8)
        assert xb.compose(inner) == Series.x(8)


# -- transcendental operations ---------------------------------------------------

def test_log_of_geometric():
    got = Series.geometric(8).log()
    assert got == Series([Q(0)] + [Q(1, k) for k in range(1, 9)], 8)


def test_exp_series():
    got = Series.x(8).exp()
    assert got == Series([Q(1, factorial(k)) for k in range(9)], 8)


def test_log_of_one_plus_x():
    got = Series.from_poly([1, 1], 8).log()
    assert got == Series([Q(0)] + [Q((-1) ** (k - 1), k) for k in range(1, 9)], 8)


def test_exp_log_round_trip_random():
    rng = random.Random(5)
    for _ in range(10):
        a = rand_series(rng, 10, first=1)
        assert a.log().exp() == a


def test_pow_half_of_one_plus_x():
    got = Series.from_poly([1, 1], 8).pow(Q(1, 2))
    want = Series([exact.binom(Q(1, 2), n) for n in range(9)], 8)
    assert got == want


def test_pow_half_of_one_minus_four_x():
    got = Series.from_poly([1, -4], 8).pow(Q(1, 2))
    want = Series([exact.binom(Q(1, 2), n) * Q(-4) ** n for n in range(9)], 8)
    assert got == want
    assert got.coeffs[:4] == [Q(1), Q(-2), Q(-2), Q(-4)]


def test_pow_zero_and_integer_agreement():
    rng = random.Random(31)
    a = rand_series(rng, 8, first=1)
    assert a.pow(0) == Series.one(8)
    assert a.pow(3) == a * a * a
    assert a.pow(-2) == Series.one(8) / (a * a)
    assert a.pow(Q(2, 1)) == a * a


def test_pow_additivity_random_rational():
    rng = random.Random(37)
    for _ in range(10):
        a = rand_series(rng, 10, first=1)
        p = Q(rng.randint(-6, 6), rng.randint(1, 4))
        q = Q(rng.randint(-6, 6), rng.randint(1, 4))
        assert a.pow(p) * a.pow(q) == a.pow(p + q)


def test_fractional_pow_needs_unit_constant():
    with pytest.raises(DomainError):
        Series.from_poly([2, 1], 5).pow(Q(1, 2))


def test_derivative():
    assert Series.from_poly([0, 0, 1], 5).derivative() == Series.from_poly([0, 2], 4)
    e = Series.x(6).exp()
    assert e.derivative() == e.truncate(5)
    with pytest.raises(RangeError):
        Series.one(0).derivative()


def test_x_log_derivative_of_geometric():
    # x * (log 1/(1-x))' = x/(1-x)
    got = xdlog(Series.geometric(9))
    assert got == Series.x(9) / Series.from_poly([1, -1], 9)


# -- polynomials ----------------------------------------------------------------

def test_poly_bound_rules():
    p = Poly([1, 2], 4)
    assert p.coeffs == [Q(1), Q(2), Q(0), Q(0), Q(0)]
    assert p.degree() == 1
    with pytest.raises(DomainError):
        Poly([1, 2, 3], 1)


def test_poly_reverse_uses_bound():
    p = Poly([0, 1], 3)
    assert p.reverse() == Poly([0, 0, 1, 0], 3)


def test_poly_shift_exact():
    p = Poly([0, 0, 1])  # x^2
    assert p.shift(1) == Poly([1, 2, 1])
    assert p.shift(Q(-1, 2)) == Poly([Q(1, 4), -1, 1])
    assert p.shift(Q(1, 3)).shift(Q(-1, 3)) == p


def test_poly_divexact():
    p = Poly([0, 2, 3, 1])  # x(x+1)(x+2)
    assert p.divexact(Poly([0, 1])) == Poly([2, 3, 1])
    assert p.divexact(Poly([1, 1])) == Poly([0, 2, 1])
    with pytest.raises(DomainError):
        Poly([1, 1]).divexact(Poly([0, 1]))


def test_poly_series_round_trip():
    p = Poly([1, 0, Q(5, 3)])
    s = p.to_series(6)
    assert s.coeffs == [Q(1), Q(0), Q(5, 3), Q(0), Q(0), Q(0), Q(0)]
    assert s.poly_part(2) == p
