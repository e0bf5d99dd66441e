"""Numerator-polynomial extraction and the connection-matrix families.

Row n of a square array (b, a) has generating function g_n(x)/(1-x)^(n+1)
for a polynomial g_n of degree <= n; the exponential analog has
denominator (1-x)^(2n+1) and numerator h_n.  Both extractions verify a
window of higher coefficients is exactly zero before returning.

The matrix constructors reproduce the operator families that transport
these numerators: U, V, J, argument shifts, F, S, C, their order-n
"tilde" companions acting on numerators with the leading x removed, the
carry-process matrices W, and the strided-window construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from . import bivariate as bv
from . import exact
from .fps import (ConsistencyError, DomainError, Poly, Q, RangeError, Series,
                  _q)
from .matrix import FinMatrix

_ONE_MINUS_X = Poly([1, -1])
_X = Poly([0, 1])


@dataclass(frozen=True)
class NumeratorResult:
    poly: Poly
    residual_checked: int


def _check_square_pair(b: Series, a: Series):
    if a.coeffs[0] != 1:
        raise DomainError("column series needs a(0) = 1")
    if b.coeffs[0] == 0:
        raise DomainError("weight series needs b(0) != 0")


def euler_numerator(b: Series, a: Series, n: int) -> NumeratorResult:
    """Numerator polynomial of row n of the square array (b, a).

    Built from the row of (b, a-1); an independent pass multiplies the
    truncated row generating function of (b, a) by (1-x)^(n+1) and
    demands that coefficients n+1..2n+1 vanish.
    """
    _check_square_pair(b, a)
    if min(b.order, a.order) < 2 * n + 2:
        raise RangeError("series order must be at least 2n+2")
    bt, at = b.truncate(n), a.truncate(n)
    am1 = at - 1
    acc = Poly.zero(n)
    p = bt
    for m in range(n + 1):
        w = p.coeffs[n]
        if w != 0:
            acc = acc + w * Poly.monomial(m) * _ONE_MINUS_X ** (n - m)
        if m < n:
            p = p * am1
    g = acc.with_bound(n)

    # residual window through the other route
    t = []
    p = bt
    for m in range(2 * n + 2):
        t.append(p.coeffs[n])
        if m < 2 * n + 1:
            p = p * at
    product = Poly(t, 2 * n + 1) * _ONE_MINUS_X ** (n + 1)
    for k in range(n + 1):
        if product.coeff(k) != g.coeff(k):
            raise ConsistencyError("numerator routes disagree at coefficient %d" % k)
    for k in range(n + 1, 2 * n + 2):
        if product.coeff(k) != 0:
            raise ConsistencyError(
                "nonzero residual at coefficient %d; is a(0) = 1 and the order big enough?" % k)
    return NumeratorResult(g, n + 1)


def _sheffer_log_row(b: Series, a: Series, n: int) -> Poly:
    """Row n of the exponential array (b, log a) as a polynomial."""
    bt = b.truncate(n)
    L = a.truncate(n).log()
    fact_n = factorial(n)
    out = []
    p = bt
    for j in range(n + 1):
        out.append(Q(fact_n, factorial(j)) * p.coeffs[n])
        if j < n:
            p = p * L
    return Poly(out, n)


def narayana_numerator(b: Series, a: Series, n: int) -> NumeratorResult:
    """Numerator polynomial of diagonal n of the exponential array (b, x*a).

    Computed by lifting the Sheffer row through the order-2n Euler
    connection matrix; verified against (1-x)^(2n+1) times the truncated
    diagonal generating function.
    """
    _check_square_pair(b, a)
    if min(b.order, a.order) < 2 * (2 * n + 1):
        raise RangeError("series order must be at least 2(2n+1)")
    s = _sheffer_log_row(b, a, n)
    lifted = (exact.rising_from(1, n) * s).with_bound(2 * n)
    hu = core_matrix("U", 2 * n).apply(lifted)
    for k in range(n + 1, 2 * n + 1):
        if hu.coeff(k) != 0:
            raise ConsistencyError("numerator degree exceeds n at coefficient %d" % k)
    h = (Q(factorial(2 * n), factorial(n)) * Poly(hu.coeffs[: n + 1], n)).with_bound(n)

    t = []
    p = b.truncate(n)
    at = a.truncate(n)
    for m in range(2 * n + 2):
        t.append(Q(factorial(m + n), factorial(m)) * p.coeffs[n])
        if m < 2 * n + 1:
            p = p * at
    product = Poly(t, 2 * n + 1) * _ONE_MINUS_X ** (2 * n + 1)
    for k in range(n + 1):
        if product.coeff(k) != h.coeff(k):
            raise ConsistencyError("numerator routes disagree at coefficient %d" % k)
    for k in range(n + 1, 2 * n + 2):
        if product.coeff(k) != 0:
            raise ConsistencyError(
                "nonzero residual at coefficient %d; is a(0) = 1 and the order big enough?" % k)
    return NumeratorResult(h, n + 1)


def alpha_poly(a: Series, n: int) -> Poly:
    """Numerator of diagonal n of (1, x*a)."""
    return euler_numerator(Series.one(a.order), a, n).poly


def phi_poly(a: Series, n: int) -> Poly:
    """Numerator of diagonal n of the exponential (1, x*a)."""
    return narayana_numerator(Series.one(a.order), a, n).poly


# -- matrix families ---------------------------------------------------------


def core_matrix(kind: str, n: int, phi=None) -> FinMatrix:
    """The order-n operator matrices U, Uinv, V, Vinv, J and the
    argument-shift E (which needs its shift parameter)."""
    if n < 0:
        raise DomainError("matrix order must be nonnegative")
    size = n + 1
    if kind == "U":
        cols = [Q(1, factorial(n)) * _ONE_MINUS_X ** (n - p) * exact.eulerian_poly(p)
                for p in range(size)]
        return FinMatrix.from_columns(cols, size)
    if kind == "Uinv":
        cols = [exact.falling_poly(p) * exact.rising_from(1, n - p)
                for p in range(size)]
        return FinMatrix.from_columns(cols, size)
    if kind == "V":
        cols = [Poly.monomial(p) * Poly([1, 1]) ** (n - p) for p in range(size)]
        return FinMatrix.from_columns(cols, size)
    if kind == "Vinv":
        cols = [Poly.monomial(p) * _ONE_MINUS_X ** (n - p) for p in range(size)]
        return FinMatrix.from_columns(cols, size)
    if kind == "J":
        return FinMatrix([[Q(int(i + j == n)) for j in range(size)] for i in range(size)])
    if kind == "E":
        if phi is None:
            raise DomainError("the shift matrix needs its shift parameter")
        return shift_matrix(phi, size)
    raise DomainError("unknown core matrix kind %r" % (kind,))


def shift_matrix(phi, size: int) -> FinMatrix:
    """Matrix of c(x) -> c(x + phi) on polynomials of bound size-1."""
    phi = _q(phi)
    data = [[Q(0)] * size for _ in range(size)]
    for j in range(size):
        p = Q(1)
        for i in range(j, -1, -1):
            data[i][j] = comb(j, i) * p
            p *= phi
    return FinMatrix(data)


def alt_matrix(size: int) -> FinMatrix:
    """Matrix of c(x) -> c(-x)."""
    return FinMatrix.diag([Q(-1) ** j for j in range(size)])


def mult_op(series, rows: int, cols: int) -> FinMatrix:
    """Multiplication by a series as a rows x cols band: entry (i, j) is
    coefficient i-j."""

    def c(k):
        if k < 0:
            return Q(0)
        if isinstance(series, Series):
            return series.coeffs[k] if k <= series.order else None
        return series.coeff(k)

    data = []
    for i in range(rows):
        row = []
        for j in range(cols):
            v = c(i - j)
            if v is None:
                raise RangeError("series order too small for the operator window")
            row.append(v)
        data.append(row)
    return FinMatrix(data)


def _f_column(n: int, p: int) -> Poly:
    """(1-x)^(2n+1) * sum(m^p * C(m+n, n) x^m) as a degree <= n polynomial."""
    out = []
    for k in range(n + 1):
        acc = Q(0)
        for j in range(min(k, 2 * n + 1) + 1):
            m = k - j
            acc += Q(-1) ** j * comb(2 * n + 1, j) * Q(m) ** p * comb(m + n, n)
        out.append(acc)
    return Poly(out, n)


def exp_matrix(kind: str, n: int) -> FinMatrix:
    """The exponential-side families F, Finv, S, Sinv and the diagonal C.

    S and Sinv come out of both their product definition and their
    closed forms; a mismatch raises ConsistencyError.
    """
    if n < 1:
        raise DomainError("exponential-family matrices need n >= 1")
    size = n + 1
    if kind == "F":
        return FinMatrix.from_columns([_f_column(n, p) for p in range(size)], size)
    if kind == "Finv":
        scale = Q(factorial(n), factorial(2 * n))
        cols = [scale * exact.falling_poly(p) * exact.rising_from(n + 1, n - p)
                for p in range(size)]
        return FinMatrix.from_columns(cols, size)
    if kind == "C":
        return FinMatrix.diag([Q(factorial(n + p), factorial(p)) for p in range(size)])
    if kind == "S":
        product = exp_matrix("F", n) * core_matrix("Uinv", n)
        cols = []
        for p in range(size):
            scale = Q(factorial(n + p) * factorial(n - p), factorial(n))
            cols.append(Poly([scale * comb(n, m - p) * comb(n, n - m) if m >= p else Q(0)
                              for m in range(size)], n))
        closed = FinMatrix.from_columns(cols, size)
        if product != closed:
            raise ConsistencyError("the two routes to S disagree")
        return closed
    if kind == "Sinv":
        product = core_matrix("U", n) * exp_matrix("Finv", n)
        cols = []
        for p in range(size):
            scale = Q(factorial(p) * factorial(n - p), factorial(2 * n))
            cols.append(Poly([scale * exact.binom(-n, m - p) * comb(2 * n, n - m)
                              if m >= p else Q(0) for m in range(size)], n))
        closed = FinMatrix.from_columns(cols, size)
        if product != closed:
            raise ConsistencyError("the two routes to Sinv disagree")
        return closed
    raise DomainError("unknown exponential matrix kind %r" % (kind,))


def _strip(m: FinMatrix, what: str) -> FinMatrix:
    if any(v != 0 for v in m.row(0)[1:]):
        raise ConsistencyError("%s does not strip cleanly" % what)
    return m.minor()


def tilde_matrix(kind: str, n: int) -> FinMatrix:
    """Order-n companions acting on numerators with the leading x removed."""
    if n < 1:
        raise DomainError("tilde matrices need n >= 1")
    if kind == "Ut":
        cols = []
        for p in range(n):
            tilde_a = exact.eulerian_poly(p + 1).divexact(_X)
            cols.append(Q(1, factorial(n)) * _ONE_MINUS_X ** (n - 1 - p) * tilde_a)
        return FinMatrix.from_columns(cols, n)
    if kind == "Utinv":
        cols = [exact.falling_from(-1, p) * exact.rising_from(1, n - p - 1)
                for p in range(n)]
        return FinMatrix.from_columns(cols, n)
    if kind == "Vt":
        return core_matrix("V", n - 1)
    if kind == "Jt":
        return core_matrix("J", n - 1)
    if kind == "It":
        return FinMatrix.identity(n)
    if kind == "Ft":
        return _strip(exp_matrix("F", n), "F")
    if kind == "Ftinv":
        scale = Q(factorial(n), factorial(2 * n))
        cols = [scale * exact.falling_from(-1, p) * exact.rising_from(n + 1, n - p - 1)
                for p in range(n)]
        return FinMatrix.from_columns(cols, n)
    if kind == "St":
        return _strip(exp_matrix("S", n), "S")
    if kind == "Ct":
        return FinMatrix.diag([Q(factorial(n + p + 1), factorial(p + 1)) for p in range(n)])
    if kind == "Dt":
        return FinMatrix.diag([Q(p + 1) for p in range(n)])
    raise DomainError("unknown tilde matrix kind %r" % (kind,))


def strided_matrix(a: Series, m: int, rows: int) -> FinMatrix:
    """Square window of the stride-m row re-reading of (a, x): row p holds
    coefficients m*p+m-1, m*p+m-2, ... with zeros below index 0."""
    if m < 1 or rows < 1:
        raise DomainError("stride and row count must be positive")
    if a.order < m * rows + m:
        raise RangeError("series order must be at least m*rows + m")
    data = []
    for p in range(rows):
        top = m * p + m - 1
        data.append([a.coeffs[top - j] if top - j >= 0 else Q(0)
                     for j in range(rows)])
    return FinMatrix(data)


def W_matrix(n: int, m: int) -> FinMatrix:
    """Carry-process matrices, built two independent ways.

    Conjugation of the dilation c(x) -> m*c(m*x) by the order-n tilde
    connection matrices must agree with the strided window of
    ((1-x^m)/(1-x))^(n+1); a mismatch raises ConsistencyError.
    """
    if n < 1 or m < 1:
        raise DomainError("W needs n >= 1 and m >= 1")
    dil = FinMatrix.diag([Q(m) ** (j + 1) for j in range(n)])
    conj = tilde_matrix("Ut", n) * dil * tilde_matrix("Utinv", n)
    window = Poly([1] * m) ** (n + 1)
    strided = strided_matrix(window.to_series(m * n + m), m, n)
    if conj != strided:
        raise ConsistencyError("the two routes to W disagree")
    return conj


# -- generating-function checks ----------------------------------------------


def alpha_gf_check(a: Series, order_x: int, order_t: int) -> bool:
    """Compare the diagonal-numerator family of (1, x*a) against its
    bivariate closed form (1-t)/(1 - t*a(x(1-t))), both truncated to
    (order_x, order_t)."""
    if a.coeffs[0] != 1:
        raise DomainError("needs a(0) = 1")
    if a.order < 2 * order_x + 2:
        raise RangeError("series order must be at least 2*order_x + 2")
    nt = order_t
    one_minus_t = [Q(1), Q(-1)] + [Q(0)] * (nt - 1) if nt >= 1 else [Q(1)]
    # denominator 1 - t*a(x(1-t))
    denom = []
    p = bv.t_const(1, nt)
    for k in range(order_x + 1):
        denom.append(bv.t_scale(bv.t_shift(bv.t_scale(p, a.coeffs[k])), Q(-1)))
        p = bv.t_mul(p, one_minus_t)
    denom[0] = bv.t_add(denom[0], bv.t_const(1, nt))
    rhs = bv.x_inv(denom)
    rhs = [bv.t_mul(one_minus_t, c) for c in rhs]
    for k in range(order_x + 1):
        alpha = alpha_poly(a, k)
        if [alpha.coeff(j) for j in range(nt + 1)] != rhs[k]:
            return False
    return True


def phi_gf_check(a: Series, order_x: int, order_t: int) -> bool:
    """Compare the exponential diagonal-numerator family of (1, x*a)
    against (1-t) * b(x(1-t)^2) with (1, x*b) inverse to (1, x(1-t*a)),
    truncated to (order_x, order_t)."""
    if a.coeffs[0] != 1:
        raise DomainError("needs a(0) = 1")
    if a.order < 2 * (2 * order_x + 1):
        raise RangeError("series order must be at least 2(2*order_x + 1)")
    nt = order_t
    one_minus_t = [Q(1), Q(-1)] + [Q(0)] * (nt - 1) if nt >= 1 else [Q(1)]
    # G = x(1 - t*a(x)) as a grid in x, one order past order_x so that the
    # shifted-down reversion is known through order_x
    G = [bv.t_zero(nt)]
    for k in range(1, order_x + 2):
        c = bv.t_scale(bv.t_shift(bv.t_const(a.coeffs[k - 1], nt)), Q(-1))
        if k == 1:
            c = bv.t_add(c, bv.t_const(1, nt))
        G.append(c)
    xb = bv.x_reversion(G)
    scale2 = bv.t_mul(one_minus_t, one_minus_t)
    p = one_minus_t
    for k in range(order_x + 1):
        rhs = bv.t_mul(xb[k + 1], p)
        p = bv.t_mul(p, scale2)
        phi = phi_poly(a, k)
        lhs = [phi.coeff(j) / factorial(k + 1) for j in range(nt + 1)]
        if lhs != rhs:
            return False
    return True
