import random
from fractions import Fraction as Q

import pytest

from riordan.fps import ConsistencyError, DomainError, PoleError, Poly, Series
from riordan.genlagrange import (beta_alpha_closed, beta_matrix,
                                 beta_phi_closed, beta_q_transform,
                                 beta_u_transform, gen_binomial_series,
                                 gen_lagrange_series, q_series, t_poly,
                                 u_polys)
from riordan.matrix import FinMatrix
from riordan.numerator import alpha_poly, phi_poly


def test_gen_binomial_series_families():
    assert gen_binomial_series(2, 1, 4) == Series([1, 1, 2, 5, 14], 4)
    assert gen_binomial_series(0, 1, 4) == Series.from_poly([1, 1], 4)
    assert gen_binomial_series(1, 1, 5) == Series.geometric(5)
    got = gen_binomial_series(Q(1, 2), 1, 12)
    half = Series.from_poly([1, 0, Q(1, 4)], 12).sqrt()
    g = half + Series.from_poly([0, Q(1, 2)], 12)
    assert got == g * g


def test_gen_binomial_series_negative_branch():
    # (1 + sqrt(1+4x))/2 solves a = 1 + x/a
    got = gen_binomial_series(-1, -1, 10)
    a = (1 + Series.from_poly([1, 4], 10).sqrt()) / 2
    assert got == a.inverse()


def test_gen_binomial_pole_rejected():
    with pytest.raises(PoleError):
        gen_binomial_series(-1, 1, 3)
    with pytest.raises(PoleError):
        gen_binomial_series(Q(-1, 2), 1, 4)
    with pytest.raises(PoleError):
        gen_binomial_series(1, 0, 2)


def test_gen_lagrange_series_beta_zero_is_identity():
    rng = random.Random(3)
    coeffs = [Q(1)] + [Q(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(10)]
    a = Series(coeffs, 10)
    assert gen_lagrange_series(a, 0, 8) == a.truncate(8)


def test_gen_lagrange_series_exponential():
    ex = Series.x(12).exp()
    got = gen_lagrange_series(ex, 1, 8)
    assert got.coeffs[:4] == [Q(1), Q(1), Q(3, 2), Q(8, 3)]


def test_gen_lagrange_series_one_plus_x_vs_reversion():
    order = 10
    a = Series.from_poly([1, 1], order + 1)
    got = gen_lagrange_series(a, 1, order)
    h = (a.inverse().mul_x()).reversion()
    assert got == a.compose(h)
    # fixed point through an explicit composition
    assert a.compose(got.pow(1).mul_x().truncate(order)) == got


def test_gen_lagrange_matches_binomial_family():
    for beta in (Q(1), Q(2), Q(1, 2), Q(-1)):
        a = Series.from_poly([1, 1], 11)
        lag = gen_lagrange_series(a, beta, 10)
        base = gen_binomial_series(beta, beta, 10).pow(1 / beta)
        assert lag == base


def test_q_series_exponential():
    ex = Series.x(10).exp()
    assert q_series(ex, 2, 6) == Series.from_poly([0, 0, 1], 6)
    geo_log = Series.geometric(10)
    q0 = q_series(geo_log, 0, 6)
    assert q0.coeffs[0] == 1


def test_t_poly_values():
    assert t_poly(1, 1, 1).poly == Poly([1, 1])
    assert t_poly(2, 2, 0).poly == Poly([0, 0, 1])
    assert t_poly(1, 2, 2).poly == Poly([2, 2])
    tp = t_poly(3, Q(1, 2), 2)
    assert tp.n == 3 and tp.phi == Q(1, 2)


def test_beta_alpha_closed_specializations():
    for n in range(1, 7):
        assert beta_alpha_closed(n, 1) == Poly([0, 1])
        assert beta_alpha_closed(n, 0) == Poly.monomial(n)
    assert beta_alpha_closed(4, Q(1, 2)) == Q(1, 2) * Poly([0, 0, 1, 1])


def test_beta_alpha_closed_matches_extraction():
    series = gen_binomial_series(3, 3, 12).pow(Q(1, 3))
    for n in range(1, 5):
        assert beta_alpha_closed(n, 3) == alpha_poly(series, n)


def test_beta_phi_closed_specializations():
    assert beta_phi_closed(2, 1) == Poly([0, 6, 6])
    assert beta_phi_closed(3, 2) == Poly([0, 120])
    assert beta_phi_closed(3, 0) == Poly([0, 0, 0, 120])


def test_beta_phi_closed_matches_extraction():
    series = gen_binomial_series(2, 1, 18)
    for n in range(1, 5):
        assert beta_phi_closed(n, 2) == phi_poly(series, n)


def test_beta_matrix_fixtures():
    assert beta_matrix("G", 2, 1) == FinMatrix([[6, 3, 1], [-8, -3, 0], [3, 1, 0]])
    assert beta_matrix("H", 3, 1) == FinMatrix(
        [[84, 28, 7, 1], [-108, -4, 15, 9], [54, -6, -1, 9],
         [-10, 2, -1, 1]]) * Q(1, 20)
    assert beta_matrix("T", 2, 1) == FinMatrix([[3, 1], [-1, 1]]) * Q(1, 2)
    assert beta_matrix("A", 2, 1) == FinMatrix([[2, 1], [-1, 0]])


def test_beta_matrix_group_property():
    # conjugated shifts compose additively in beta
    for n in (2, 3):
        for b1, b2 in ((Q(1), Q(1)), (Q(1, 2), Q(3, 2)), (Q(-1), Q(2))):
            lhs = beta_matrix("G", n, b1) * beta_matrix("G", n, b2)
            assert lhs == beta_matrix("G", n, b1 + b2)
            lhs = beta_matrix("H", n, b1) * beta_matrix("H", n, b2)
            assert lhs == beta_matrix("H", n, b1 + b2)


def test_beta_matrix_x_needs_no_beta():
    x3 = beta_matrix("X", 3)
    assert x3.entry(0, 0) == 3
    with pytest.raises(DomainError):
        beta_matrix("G", 3)


def test_beta_u_transform():
    assert beta_u_transform(Poly([0, 0, 1], 2), 2, 1) == Poly([0, 2, 1])
    p = Poly([0, 5, -2, 1], 3)
    assert beta_u_transform(p, 3, 0) == p
    with pytest.raises(ConsistencyError):
        beta_u_transform(Poly([1, 1], 1), 1, 1)  # nonzero constant term


def test_beta_u_transform_matches_definition():
    # rows of (1, log lag) equal the transformed rows of (1, log a)
    a = Series.from_poly([1, 1], 14)
    for beta in (Q(1), Q(-1), Q(1, 2)):
        lag = gen_lagrange_series(a, beta, 12)
        us = u_polys(a, 6)
        lag_us = u_polys(lag, 6)
        for n in range(7):
            assert beta_u_transform(us[n], n, beta) == lag_us[n]


def test_beta_q_transform_matches_definition():
    ex = Series.x(14).exp()
    for beta in (Q(1), Q(2)):
        lag = gen_lagrange_series(ex, beta, 12)
        for n in range(4):
            got = beta_q_transform(q_series(ex, n, 8), n, beta)
            assert got == q_series(lag, n, 8)


def test_resolvent_sum_identity():
    # sum of u_n(phi) q_n(x) over n telescopes to 1/(1 - phi x)
    ex = Series.x(12).exp()
    beta = Q(1)
    lag = gen_lagrange_series(ex, beta, 10)
    us = u_polys(lag, 6)
    for phi in (Q(1), Q(-1, 2), Q(2)):
        acc = Series.zero(6)
        for n in range(7):
            acc = acc + q_series(lag, n, 6) * us[n].eval(phi)
        assert acc == Series.one(6) / Series.from_poly([1, -phi], 6)
