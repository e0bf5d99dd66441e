"""Generalized binomial and Lagrange series and the beta-matrix families.

The one-parameter family attached to a series a with a(0) = 1 is the
unique solution of  lag = a(x * lag^beta); its beta-th power is the
substitution part of the inverse of (1, x*a^(-beta)).  For a = 1 + x
this specializes to the generalized binomial series whose coefficients
have the closed product form implemented in :func:`gen_binomial_series`.

The matrix families G, H, A, T conjugate an exact rational argument
shift by the connection matrices; each is also computed from its closed
form, and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import exact
from .fps import (ConsistencyError, DomainError, PoleError, Poly, Q,
                  RangeError, Series, _q)
from .matrix import FinMatrix
from .numerator import core_matrix, exp_matrix, shift_matrix, tilde_matrix

_ONE_MINUS_X = Poly([1, -1])
_X = Poly([0, 1])


def gen_binomial_series(beta, phi, order: int) -> Series:
    """Coefficient n is (phi/(phi+beta*n)) * binom(phi+beta*n, n).

    Parameter pairs that put phi + beta*n at zero for some n in range
    are rejected: the closed form only defines those coefficients as a
    limit.
    """
    beta, phi = _q(beta), _q(phi)
    out = []
    for k in range(order + 1):
        d = phi + beta * k
        if d == 0:
            raise PoleError("phi + beta*n vanishes at n = %d" % k)
        out.append(phi / d * exact.binom(d, k))
    return Series(out, order)


def u_polys(a: Series, top: int):
    """Rows 0..top of the exponential array (1, log a) as polynomials."""
    if a.coeffs[0] != 1:
        raise DomainError("needs a(0) = 1")
    if a.order < top:
        raise RangeError("series order too small")
    L = a.truncate(top).log()
    rows = [[Q(0)] * (top + 1) for _ in range(top + 1)]
    p = Series.one(top)
    for j in range(top + 1):
        for n in range(top + 1):
            rows[n][j] = Q(factorial(n), factorial(j)) * p.coeffs[n]
        if j < top:
            p = p * L
    return [Poly(rows[n][: n + 1], n) for n in range(top + 1)]


def gen_lagrange_series(a: Series, beta, order: int) -> Series:
    """The solution of  lag = a(x * lag^beta), truncated at ``order``.

    Computed by reverting x*a^(-beta); the result is verified against
    the Sheffer-row coefficient formula and the fixed-point identity,
    so a silent failure of either route raises ConsistencyError.
    """
    beta = _q(beta)
    if a.coeffs[0] != 1:
        raise DomainError("needs a(0) = 1")
    if a.order < order:
        raise RangeError("series order too small")
    if beta == 0:
        return a.truncate(order)
    h = a.pow(-beta).mul_x().reversion()
    lag = a.compose(h).truncate(order)
    if lag.pow(beta) != h.div_x():
        raise ConsistencyError("fixed point of the generalized Lagrange series fails")
    us = u_polys(a, order)
    for k in range(1, order + 1):
        ut = us[k].divexact(_X)
        if lag.coeffs[k] != ut.eval(1 + beta * k) / factorial(k):
            raise ConsistencyError("coefficient %d disagrees with the row formula" % k)
    return lag


def q_series(a: Series, n: int, order: int) -> Series:
    """Column n of the inverse of the exponential array (1, log a)."""
    if a.coeffs[0] != 1:
        raise DomainError("needs a(0) = 1")
    if a.order < max(order, 1) or order < n:
        raise RangeError("series order too small")
    gbar = a.truncate(order).log().reversion()
    p = gbar.pow(n)
    fact_n = factorial(n)
    return Series([Q(factorial(k), fact_n) * p.coeffs[k] for k in range(order + 1)],
                  order)


@dataclass(frozen=True)
class TPoly:
    poly: Poly
    phi: Fraction
    beta_arg: Fraction
    n: int


def t_poly(n: int, phi, beta_arg) -> TPoly:
    """sum over m of binom(phi, m) * binom(beta, n-m) * x^m."""
    phi, beta_arg = _q(phi), _q(beta_arg)
    coeffs = [exact.binom(phi, m) * exact.binom(beta_arg, n - m) for m in range(n + 1)]
    return TPoly(Poly(coeffs, n), phi, beta_arg, n)


def beta_alpha_closed(n: int, beta) -> Poly:
    """(1/n) sum binom(n(1-beta), m-1) binom(n*beta, n-m) x^m, n >= 1."""
    if n < 1:
        raise DomainError("needs n >= 1")
    beta = _q(beta)
    coeffs = [Q(0)] + [exact.binom(n * (1 - beta), m - 1) * exact.binom(n * beta, n - m)
                       for m in range(1, n + 1)]
    return Poly(coeffs, n) * Q(1, n)


def beta_phi_closed(n: int, beta) -> Poly:
    """((n+1)!/n) sum binom(n(2-beta), m-1) binom(n*beta, n-m) x^m, n >= 1."""
    if n < 1:
        raise DomainError("needs n >= 1")
    beta = _q(beta)
    coeffs = [Q(0)] + [exact.binom(n * (2 - beta), m - 1) * exact.binom(n * beta, n - m)
                       for m in range(1, n + 1)]
    return Poly(coeffs, n) * Q(factorial(n + 1), n)


def _g_closed(n: int, beta: Fraction) -> FinMatrix:
    size = n + 1
    nb = n * beta
    cols = []
    for p in range(size):
        cols.append(Poly([exact.binom(p - nb, m) * exact.binom(nb + n - p, n - m)
                          for m in range(size)], n))
    return FinMatrix.from_columns(cols, size)


def _h_closed(n: int, beta: Fraction) -> FinMatrix:
    size = n + 1
    nb = n * beta
    cols = []
    for p in range(size):
        acc = Poly.zero(n)
        for m in range(p, n + 1):
            term = t_poly(m, n + m - nb, nb).poly * _ONE_MINUS_X ** (n - m)
            acc = acc + Q(comb(n - p, n - m), comb(n + m, m)) * term
        cols.append(acc.with_bound(n))
    return FinMatrix.from_columns(cols, size)


def _a_closed(n: int, beta: Fraction) -> FinMatrix:
    nb = n * beta
    cols = []
    for p in range(n):
        acc = Poly.zero(max(n - 1, 0))
        for m in range(p, n):
            term = t_poly(m, m + 1 - nb, nb).poly * _ONE_MINUS_X ** (n - 1 - m)
            acc = acc + Q(comb(n - 1 - p, n - 1 - m), m + 1) * term
        cols.append(acc.with_bound(n - 1))
    return FinMatrix.from_columns(cols, n)


def _t_closed(n: int, beta: Fraction) -> FinMatrix:
    nb = n * beta
    cols = []
    for p in range(n):
        acc = Poly.zero(max(n - 1, 0))
        for m in range(p, n):
            term = t_poly(m, n + m + 1 - nb, nb).poly * _ONE_MINUS_X ** (n - 1 - m)
            acc = acc + Q(comb(n - 1 - p, n - 1 - m), comb(n + 1 + m, m)) * term
        cols.append(acc.with_bound(n - 1))
    return FinMatrix.from_columns(cols, n)


def _x_closed(n: int) -> FinMatrix:
    size = n + 1
    cols = [(_ONE_MINUS_X - _ONE_MINUS_X ** (n + 1)).divexact(_X).with_bound(n)]
    for p in range(1, size):
        cols.append(Poly.monomial(p - 1) * _ONE_MINUS_X)
    return FinMatrix.from_columns(cols, size)


def beta_matrix(kind: str, n: int, beta=None) -> FinMatrix:
    """The conjugated-shift families G, H, A, T and the nilpotent X.

    Every kind is produced both by conjugating the rational argument
    shift and from its closed form; disagreement raises
    ConsistencyError.  X takes no beta.
    """
    if n < 1:
        raise DomainError("beta matrices need n >= 1")
    if kind == "X":
        conj = core_matrix("Vinv", n) * _down_shift(n + 1) * core_matrix("V", n)
        closed = _x_closed(n)
        if conj != closed:
            raise ConsistencyError("the two routes to X disagree")
        return closed
    if beta is None:
        raise DomainError("kind %r needs a beta parameter" % (kind,))
    beta = _q(beta)
    nb = n * beta
    if kind == "G":
        conj = core_matrix("U", n) * shift_matrix(nb, n + 1) * core_matrix("Uinv", n)
        closed = _g_closed(n, beta)
    elif kind == "H":
        conj = exp_matrix("F", n) * shift_matrix(nb, n + 1) * exp_matrix("Finv", n)
        closed = _h_closed(n, beta)
    elif kind == "A":
        conj = tilde_matrix("Ut", n) * shift_matrix(nb, n) * tilde_matrix("Utinv", n)
        closed = _a_closed(n, beta)
    elif kind == "T":
        conj = tilde_matrix("Ft", n) * shift_matrix(nb, n) * tilde_matrix("Ftinv", n)
        closed = _t_closed(n, beta)
    else:
        raise DomainError("unknown beta matrix kind %r" % (kind,))
    if conj != closed:
        raise ConsistencyError("the two routes to %s disagree" % kind)
    return closed


def _down_shift(size: int) -> FinMatrix:
    """Matrix of c(x) -> (c(x) - c(0))/x."""
    return FinMatrix([[Q(int(j == i + 1)) for j in range(size)] for i in range(size)])


def beta_u_transform(u: Poly, n: int, beta) -> Poly:
    """x/(x + n*beta) * u(x + n*beta), exact; u(0) = 0 guarantees
    divisibility for n >= 1."""
    beta = _q(beta)
    nb = n * beta
    if nb == 0:
        return Poly(u.coeffs, u.bound)
    shifted = u.shift(nb)
    try:
        return (shifted * _X).divexact(Poly([nb, 1]))
    except DomainError as err:
        raise ConsistencyError("malformed row polynomial: %s" % err) from err


def beta_q_transform(q: Series, n: int, beta) -> Series:
    """1/(1 + n*beta*x) * q(x / (1 + n*beta*x))."""
    beta = _q(beta)
    nb = n * beta
    if nb == 0:
        return Series(q.coeffs, q.order)
    den = Series.from_poly([1, nb], q.order)
    inner = Series.x(q.order) / den
    return q.compose(inner) / den
