"""Named executable checks: every printed matrix, every theorem suite.

Each check has a stable identifier (thm2.1 .. thm9.5, ex2.1 .. ex8.1,
eq1, eq2, eq3, w-amazing, col-sums, fixtures) and returns a list of
failure payloads; an empty list means the check passed.  Randomized
suites draw from a seeded generator, so identical invocations produce
identical reports.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from math import comb, factorial

from . import exact
from .arrays import EXPONENTIAL, RiordanArray, lagrange_pair, table_row
from .fps import ConsistencyError, Poly, Q, Series, xdlog
from .genlagrange import (beta_alpha_closed, beta_matrix, beta_phi_closed,
                          beta_q_transform, beta_u_transform,
                          gen_binomial_series, gen_lagrange_series, q_series,
                          u_polys)
from .matrix import FinMatrix
from .numerator import (W_matrix, alpha_gf_check, alpha_poly, alt_matrix,
                        core_matrix, euler_numerator, exp_matrix, mult_op,
                        narayana_numerator, phi_gf_check, phi_poly,
                        shift_matrix, strided_matrix, tilde_matrix)

DEFAULT_BETAS = (Q(-2), Q(-1), Q(-1, 2), Q(1, 3), Q(1, 2), Q(1), Q(2), Q(3))
DEFAULT_SEED = 20250809


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def n_passed(self) -> int:
        return sum(1 for r in self.results if r.passed)


class _Ctx:
    def __init__(self, max_n: int, betas, seed: int):
        self.max_n = max_n
        self.betas = tuple(Q(b) for b in betas)
        self.seed = seed

    def rng(self, name: str) -> random.Random:
        return random.Random(self.seed ^ zlib.crc32(name.encode()))


# -- random inputs ------------------------------------------------------------


def _rand_series(rng, order, first):
    coeffs = [Q(first)] + [Q(rng.randint(-3, 3), rng.randint(1, 3))
                           for _ in range(order)]
    return Series(coeffs, order)


def _rand_unit(rng, order):
    """Random series with constant term 1."""
    return _rand_series(rng, order, 1)


def _rand_weight(rng, order):
    """Random series with nonzero constant term."""
    return _rand_series(rng, order, Q(rng.choice([-3, -2, -1, 1, 2, 3]),
                                      rng.randint(1, 3)))


def _rand_poly_exact(rng, degree, bound):
    coeffs = [Q(rng.randint(-3, 3)) for _ in range(degree)]
    coeffs.append(Q(rng.choice([-3, -2, -1, 1, 2, 3])))
    return Poly(coeffs, bound)


def beta_family(beta, phi, order: int) -> Series:
    """phi-th power of the one-parameter binomial family, routed so that
    no parameter pair ever sits on a pole of the closed form."""
    beta, phi = Q(beta), Q(phi)
    if beta == 0:
        return Series.from_poly([1, 1], order).pow(phi)
    return gen_binomial_series(beta, beta, order).pow(phi / beta)


def _fmt(value) -> str:
    if isinstance(value, FinMatrix):
        return repr(value)
    if isinstance(value, Poly):
        return "[%s]" % ", ".join(str(c) for c in value.coeffs)
    if isinstance(value, Series):
        return "[%s]" % ", ".join(str(c) for c in value.coeffs)
    return str(value)


def _neq(fails, label, got, want):
    if not (got == want):
        fails.append("%s: got %s, want %s" % (label, _fmt(got), _fmt(want)))


# -- fixtures -----------------------------------------------------------------

_M = FinMatrix

_FIX_U = {
    1: _M([[1, 0], [-1, 1]]),
    2: _M([[1, 0, 0], [-2, 1, 1], [1, -1, 1]]) * Q(1, 2),
    3: _M([[1, 0, 0, 0], [-3, 1, 1, 1], [3, -2, 0, 4], [-1, 1, -1, 1]]) * Q(1, 6),
}
_FIX_UINV = {
    1: _M([[1, 0], [1, 1]]),
    2: _M([[2, 0, 0], [3, 1, -1], [1, 1, 1]]),
    3: _M([[6, 0, 0, 0], [11, 2, -1, 2], [6, 3, 0, -3], [1, 1, 1, 1]]),
}
_FIX_J3 = _M([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
_FIX_V3 = _M([[1, 0, 0, 0], [3, 1, 0, 0], [3, 2, 1, 0], [1, 1, 1, 1]])
_FIX_V3INV = _M([[1, 0, 0, 0], [-3, 1, 0, 0], [3, -2, 1, 0], [-1, 1, -1, 1]])
_FIX_EULER = [[1], [0, 1], [0, 1, 1], [0, 1, 4, 1], [0, 1, 11, 11, 1]]
_FIX_F = {
    1: _M([[1, 0], [-1, 2]]),
    2: _M([[1, 0, 0], [-2, 3, 3], [1, -3, 9]]),
    3: _M([[1, 0, 0, 0], [-3, 4, 4, 4], [3, -8, 12, 52], [-1, 4, -16, 64]]),
}
_FIX_FINV = {
    1: _M([[2, 0], [1, 1]]) * Q(1, 2),
    2: _M([[12, 0, 0], [7, 3, -1], [1, 1, 1]]) * Q(2, 24),
    3: _M([[120, 0, 0, 0], [74, 20, -4, 2], [15, 9, 3, -3], [1, 1, 1, 1]]) * Q(6, 720),
}
_FIX_S = {
    1: _M([[1, 0], [1, 2]]),
    2: _M([[1, 0, 0], [4, 3, 0], [1, 3, 6]]) * 2,
    3: _M([[1, 0, 0, 0], [9, 4, 0, 0], [9, 12, 10, 0], [1, 4, 10, 20]]) * 6,
    4: _M([[1, 0, 0, 0, 0], [16, 5, 0, 0, 0], [36, 30, 15, 0, 0],
           [16, 30, 40, 35, 0], [1, 5, 15, 35, 70]]) * 24,
}
_FIX_SINV = {
    1: _M([[2, 0], [-1, 1]]) * Q(1, 2),
    2: _M([[6, 0, 0], [-8, 2, 0], [3, -1, 1]]) * Q(2, 24),
    3: _M([[20, 0, 0, 0], [-45, 5, 0, 0], [36, -6, 2, 0], [-10, 2, -1, 1]]) * Q(6, 720),
    4: _M([[70, 0, 0, 0, 0], [-224, 14, 0, 0, 0], [280, -28, "14/3", 0, 0],
           [-160, 20, "-16/3", 2, 0], [35, -5, "5/3", -1, 1]]) * Q(24, 40320),
}
_FIX_G = {
    1: _M([[2, 1], [-1, 0]]),
    2: _M([[6, 3, 1], [-8, -3, 0], [3, 1, 0]]),
    3: _M([[20, 10, 4, 1], [-45, -20, -6, 0], [36, 15, 4, 0], [-10, -4, -1, 0]]),
}
_FIX_GINV = {
    1: _M([[0, -1], [1, 2]]),
    2: _M([[0, 1, 3], [0, -3, -8], [1, 3, 6]]),
    3: _M([[0, -1, -4, -10], [0, 4, 15, 36], [0, -6, -20, -45], [1, 4, 10, 20]]),
}
_FIX_X3 = _M([[3, 1, 0, 0], [-6, -1, 1, 0], [4, 0, -1, 1], [-1, 0, 0, -1]])
_FIX_X3_SQ = _M([[3, 2, 1, 0], [-8, -5, -2, 1], [7, 4, 1, -2], [-2, -1, 0, 1]])
_FIX_X3_CB = _M([[1, 1, 1, 1], [-3, -3, -3, -3], [3, 3, 3, 3], [-1, -1, -1, -1]])
_FIX_G_ROOT = {
    2: _M([[3, 1, 0], [-3, 0, 1], [1, 0, 0]]),
    3: _M([[4, 1, 0, 0], [-6, 0, 1, 0], [4, 0, 0, 1], [-1, 0, 0, 0]]),
    4: _M([[5, 1, 0, 0, 0], [-10, 0, 1, 0, 0], [10, 0, 0, 1, 0],
           [-5, 0, 0, 0, 1], [1, 0, 0, 0, 0]]),
}
_FIX_H = {
    1: _M([[3, 1], [-1, 1]]) * Q(1, 2),
    2: _M([[15, 5, 1], [-12, 2, 4], [3, -1, 1]]) * Q(1, 6),
    3: _M([[84, 28, 7, 1], [-108, -4, 15, 9], [54, -6, -1, 9], [-10, 2, -1, 1]]) * Q(1, 20),
}
_FIX_UT4 = _M([[1, 1, 1, 1], [-3, -1, 3, 11], [3, -1, -3, 11], [-1, 1, -1, 1]]) * Q(1, 24)
_FIX_UT4INV = _M([[6, -2, 2, -6], [11, -1, -1, 11], [6, 2, -2, -6], [1, 1, 1, 1]])
_FIX_FT4 = _M([[1, 1, 1, 1], [-3, 3, 15, 39], [3, -9, 9, 171], [-1, 5, -25, 125]]) * 5
_FIX_FT4INV = _M([[210, -30, 10, -6], [107, 19, -13, 11], [18, 10, 2, -6],
                  [1, 1, 1, 1]]) * Q(24, 40320)
_FIX_W = {
    (1, 2): _M([[2]]), (1, 3): _M([[3]]), (1, 4): _M([[4]]),
    (2, 2): _M([[3, 1], [1, 3]]),
    (3, 2): _M([[4, 1, 0], [4, 6, 4], [0, 1, 4]]),
    (4, 2): _M([[5, 1, 0, 0], [10, 10, 5, 1], [1, 5, 10, 10], [0, 0, 1, 5]]),
    (2, 3): _M([[6, 3], [3, 6]]),
    (3, 3): _M([[10, 4, 1], [16, 19, 16], [1, 4, 10]]),
    (4, 3): _M([[15, 5, 1, 0], [51, 45, 30, 15], [15, 30, 45, 51], [0, 1, 5, 15]]),
    (2, 4): _M([[10, 6], [6, 10]]),
    (3, 4): _M([[20, 10, 4], [40, 44, 40], [4, 10, 20]]),
    (4, 4): _M([[35, 15, 5, 1], [155, 135, 101, 65], [65, 101, 135, 155],
                [1, 5, 15, 35]]),
}
_FIX_A = {
    2: _M([[2, 1], [-1, 0]]),
    3: _M([[5, "5/2", 1], [-6, -2, 0], [2, "1/2", 0]]),
    4: _M([[14, 7, 3, 1], [-28, "-35/3", "-10/3", 0], [20, "22/3", "5/3", 0],
           [-5, "-5/3", "-1/3", 0]]),
}
_FIX_T = {
    2: _M([[3, 1], [-1, 1]]) * Q(1, 2),
    3: _M([[12, 4, 1], [-9, 2, 3], [2, -1, 1]]) * Q(1, 5),
    4: _M([[55, "55/3", 5, 1], [-66, 0, 10, 6], [30, -6, 0, 6],
           [-5, "5/3", -1, 1]]) * Q(1, 14),
}
_FIX_TRIANGLES = {
    "bell-shift": [[1], [1, 1], [0, 2, 1], [0, 1, 3, 1], [0, 0, 3, 4, 1],
                   [0, 0, 1, 6, 5, 1]],
    "catalan-log": [[1], [1, 1], [3, 2, 1], [10, 6, 3, 1], [35, 20, 10, 4, 1],
                    [126, 70, 35, 15, 5, 1]],
    "catalan-deriv": [[1], [2, 1], [6, 3, 1], [20, 10, 4, 1], [70, 35, 15, 5, 1],
                      [252, 126, 56, 21, 6, 1]],
    "catalan-recip": [[1], [1, 1], [3, 0, 1], [10, 1, -1, 1], [35, 4, 0, -2, 1],
                      [126, 15, 1, 0, -3, 1]],
}


def _binom_band_T(phi, size: int) -> FinMatrix:
    """Transpose of multiplication by (1+x)^phi: entry (i, j) = binom(phi, j-i)."""
    return FinMatrix([[exact.binom(phi, j - i) for j in range(size)]
                      for i in range(size)])


def _catalan(order: int) -> Series:
    return gen_binomial_series(2, 1, order)


def _chk_fixtures(ctx):
    fails = []
    for n, want in _FIX_U.items():
        _neq(fails, "U_%d" % n, core_matrix("U", n), want)
    for n, want in _FIX_UINV.items():
        _neq(fails, "Uinv_%d" % n, core_matrix("Uinv", n), want)
    _neq(fails, "J_3", core_matrix("J", 3), _FIX_J3)
    _neq(fails, "V_3", core_matrix("V", 3), _FIX_V3)
    _neq(fails, "Vinv_3", core_matrix("Vinv", 3), _FIX_V3INV)
    stirling_left = _M([[1, 0, 0, 0], [0, 1, -1, 2], [0, 0, 1, -3], [0, 0, 0, 1]]) * 6
    stirling_left = stirling_left * FinMatrix.diag([1, 1, Q(1, 2), Q(1, 6)])
    _neq(fails, "Uinv_3*Vinv_3",
         core_matrix("Uinv", 3) * core_matrix("Vinv", 3), stirling_left)
    stirling_right = FinMatrix.diag([1, 1, 2, 6]) * _M(
        [[1, 0, 0, 0], [0, 1, 1, 1], [0, 0, 1, 3], [0, 0, 0, 1]]) * Q(1, 6)
    _neq(fails, "V_3*U_3", core_matrix("V", 3) * core_matrix("U", 3), stirling_right)
    for n, want in enumerate(_FIX_EULER):
        _neq(fails, "A_%d" % n, exact.eulerian_poly(n), Poly(want))
    for n, want in _FIX_F.items():
        _neq(fails, "F_%d" % n, exp_matrix("F", n), want)
    for n, want in _FIX_FINV.items():
        _neq(fails, "Finv_%d" % n, exp_matrix("Finv", n), want)
    for n, want in _FIX_S.items():
        _neq(fails, "S_%d" % n, exp_matrix("S", n), want)
    for n, want in _FIX_SINV.items():
        _neq(fails, "Sinv_%d" % n, exp_matrix("Sinv", n), want)
    s3_fact = _FIX_V3INV * FinMatrix.diag([1, 4, 10, 20]) * _FIX_V3 * 6
    _neq(fails, "S_3 factorization", exp_matrix("S", 3), s3_fact)
    for n, want in _FIX_G.items():
        _neq(fails, "G_%d" % n, beta_matrix("G", n, 1), want)
    for n, want in _FIX_GINV.items():
        _neq(fails, "Ginv_%d" % n, beta_matrix("G", n, -1), want)
    g3_fact = _FIX_V3INV * _binom_band_T(3, 4) * _FIX_V3
    _neq(fails, "G_3 factorization", beta_matrix("G", 3, 1), g3_fact)
    x3 = beta_matrix("X", 3)
    _neq(fails, "X_3", x3, _FIX_X3)
    _neq(fails, "X_3^2", x3 ** 2, _FIX_X3_SQ)
    _neq(fails, "X_3^3", x3 ** 3, _FIX_X3_CB)
    ident = FinMatrix.identity(4)
    _neq(fails, "G_3 power sum",
         ident + 3 * x3 + 3 * (x3 ** 2) + x3 ** 3, _FIX_G[3])
    _neq(fails, "Ginv_3 power sum",
         ident - 3 * x3 + 6 * (x3 ** 2) - 10 * (x3 ** 3), _FIX_GINV[3])
    for n, want in _FIX_G_ROOT.items():
        got = beta_matrix("G", n, Q(1, n))
        _neq(fails, "G_%d^(1/%d)" % (n, n), got, want)
        _neq(fails, "I + X_%d" % n,
             FinMatrix.identity(n + 1) + beta_matrix("X", n), want)
    for n, want in _FIX_H.items():
        _neq(fails, "H_%d" % n, beta_matrix("H", n, 1), want)
    h3_fact = (_FIX_V3INV * FinMatrix.diag([1, 4, 10, 20]) * _binom_band_T(3, 4)
               * FinMatrix.diag([1, Q(1, 4), Q(1, 10), Q(1, 20)]) * _FIX_V3)
    _neq(fails, "H_3 factorization", beta_matrix("H", 3, 1), h3_fact)
    _neq(fails, "Ut_4", tilde_matrix("Ut", 4), _FIX_UT4)
    _neq(fails, "Utinv_4", tilde_matrix("Utinv", 4), _FIX_UT4INV)
    tl = (_M([[1, -1, 2, -6], [0, 1, -3, 11], [0, 0, 1, -6], [0, 0, 0, 1]]) * 24
          * FinMatrix.diag([1, Q(1, 2), Q(1, 6), Q(1, 24)]))
    _neq(fails, "Utinv_4*Vtinv_4",
         tilde_matrix("Utinv", 4) * tilde_matrix("Vt", 4).inverse(), tl)
    tr = (FinMatrix.diag([1, 2, 6, 24])
          * _M([[1, 1, 1, 1], [0, 1, 3, 7], [0, 0, 1, 6], [0, 0, 0, 1]]) * Q(1, 24))
    _neq(fails, "Vt_4*Ut_4", tilde_matrix("Vt", 4) * tilde_matrix("Ut", 4), tr)
    _neq(fails, "Ft_4", tilde_matrix("Ft", 4), _FIX_FT4)
    _neq(fails, "Ftinv_4", tilde_matrix("Ftinv", 4), _FIX_FT4INV)
    for (n, m), want in _FIX_W.items():
        _neq(fails, "W_(%d,%d)" % (n, m), W_matrix(n, m), want)
    w32 = W_matrix(3, 2)
    a3t = Poly([1, 4, 1], 2)
    _neq(fails, "W_(3,2) eigenvector", w32.apply(a3t), 8 * a3t)
    _neq(fails, "W_(3,3) eigenvector", W_matrix(3, 3).apply(a3t), 27 * a3t)
    _neq(fails, "W_(3,2)^2", w32 * w32, _FIX_W[(3, 4)])
    red1 = (mult_op(Series.geometric(2), 2, 3) * w32
            * mult_op(Poly([1, -1]), 3, 2))
    _neq(fails, "W_(3,2) reduction to W_(2,2)", red1, _FIX_W[(2, 2)])
    red2 = (mult_op(Series.geometric(2).pow(2), 1, 3) * w32
            * mult_op(Poly([1, -1]) ** 2, 3, 1))
    _neq(fails, "W_(3,2) reduction to W_(1,2)", red2, _FIX_W[(1, 2)])
    vt3 = tilde_matrix("Vt", 3)
    mid = _M([[2, 1, 0], [0, 4, 4], [0, 0, 8]])
    _neq(fails, "W_(3,2) band factorization", vt3.inverse() * mid * vt3, w32)
    for n, want in _FIX_A.items():
        _neq(fails, "A_%d" % n, beta_matrix("A", n, 1), want)
    vt4 = tilde_matrix("Vt", 4)
    dt4 = tilde_matrix("Dt", 4)
    a4_fact = (vt4.inverse() * dt4 * _binom_band_T(4, 4) * dt4.inverse() * vt4)
    _neq(fails, "A_4 factorization", beta_matrix("A", 4, 1), a4_fact)
    for n, want in _FIX_T.items():
        _neq(fails, "T_%d" % n, beta_matrix("T", n, 1), want)
    ctd = FinMatrix.diag([comb(5 + p, p) for p in range(4)])
    t4_fact = vt4.inverse() * ctd * _binom_band_T(4, 4) * ctd.inverse() * vt4
    _neq(fails, "T_4 factorization", beta_matrix("T", 4, 1), t4_fact)

    order = 10
    cat = _catalan(order)
    one_plus_x = Series.from_poly([1, 1], order)
    shifted_bell = RiordanArray(one_plus_x, one_plus_x.mul_x().truncate(order))
    log_pref = 1 + xdlog(_catalan(order + 1))
    arr_log = RiordanArray(log_pref, cat.mul_x().truncate(order))
    arr_deriv = RiordanArray(cat.mul_x().derivative().truncate(order),
                             cat.mul_x().truncate(order))
    arr_recip = RiordanArray(log_pref, cat.inverse().mul_x().truncate(order))
    for key, arr in (("bell-shift", shifted_bell), ("catalan-log", arr_log),
                     ("catalan-deriv", arr_deriv), ("catalan-recip", arr_recip)):
        for n, want in enumerate(_FIX_TRIANGLES[key]):
            _neq(fails, "%s triangle row %d" % (key, n),
                 list(arr.row(n)), [Q(v) for v in want])
    return fails


# -- theorem suites -----------------------------------------------------------


def _chk_thm21(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        lhs = (core_matrix("U", n) * shift_matrix(1, n + 1) * alt_matrix(n + 1)
               * core_matrix("Uinv", n))
        _neq(fails, "n=%d" % n, lhs, core_matrix("J", n) * Q(-1) ** n)
    return fails


def _chk_thm22(ctx):
    fails = []
    rng = ctx.rng("thm2.2")
    top = min(6, ctx.max_n)
    order = 2 * top + 2
    for trial in range(20):
        b = _rand_weight(rng, order)
        a = _rand_unit(rng, order)
        binv = b * a.inverse()
        ainv = a.inverse()
        for n in range(top + 1):
            lhs = Q(-1) ** n * euler_numerator(b, a, n).poly.reverse()
            rhs = euler_numerator(binv, ainv, n).poly
            _neq(fails, "trial=%d n=%d" % (trial, n), rhs, lhs)
    return fails


def _chk_thm23(ctx):
    fails = []
    rng = ctx.rng("thm2.3")
    order = 2 * ctx.max_n + 2
    for trial in range(20):
        b = _rand_weight(rng, order)
        a = _rand_unit(rng, order)
        for n in range(ctx.max_n + 1):
            got = euler_numerator(b, a, n).poly.eval(1)
            _neq(fails, "trial=%d n=%d" % (trial, n), got,
                 b.coeffs[0] * a.coeffs[1] ** n)
    return fails


def _chk_thm24(ctx):
    fails = []
    rng = ctx.rng("thm2.4")
    one_minus_x = Poly([1, -1])
    for n in range(1, ctx.max_n + 1):
        for m in range(n + 1):
            c = _rand_poly_exact(rng, n - m, n - m)
            lhs = core_matrix("U", n).apply(c.with_bound(n))
            rhs = (Q(factorial(n - m), factorial(n)) * one_minus_x ** m
                   * core_matrix("U", n - m).apply(c))
            _neq(fails, "drop n=%d m=%d" % (n, m), lhs, rhs)
            d = _rand_poly_exact(rng, n - m, n - m)
            lhs2 = core_matrix("Uinv", n).apply((one_minus_x ** m * d).with_bound(n))
            rhs2 = (Q(factorial(n), factorial(n - m))
                    * core_matrix("Uinv", n - m).apply(d))
            _neq(fails, "lift n=%d m=%d" % (n, m), lhs2, rhs2)
    return fails


def _chk_thm25(ctx):
    fails = []
    x = Poly([0, 1])
    for n in range(1, ctx.max_n + 1):
        _neq(fails, "beta=1 n=%d" % n, beta_alpha_closed(n, 1), x)
        _neq(fails, "beta=0 n=%d" % n, beta_alpha_closed(n, 0), Poly.monomial(n))
        half = beta_alpha_closed(2 * n, Q(1, 2))
        want = Q(1, 2) * Poly([1, 1]) * Poly.monomial(n)
        _neq(fails, "beta=1/2 n=%d" % (2 * n), half, want)
        for beta in ctx.betas:
            dual = (x * beta_alpha_closed(n, beta).reverse()).with_bound(n)
            _neq(fails, "duality beta=%s n=%d" % (beta, n),
                 beta_alpha_closed(n, 1 - beta), dual)
    return fails


def _chk_eq2(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        order = 2 * n + 2
        for beta in ctx.betas:
            series = beta_family(beta, 1, order)
            got = alpha_poly(series, n)
            _neq(fails, "n=%d beta=%s" % (n, beta), got, beta_alpha_closed(n, beta))
    return fails


def _chk_thm31(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        lhs = (exp_matrix("F", n) * shift_matrix(n + 1, n + 1) * alt_matrix(n + 1)
               * exp_matrix("Finv", n))
        _neq(fails, "n=%d" % n, lhs, core_matrix("J", n) * Q(-1) ** n)
    return fails


def _chk_thm32(ctx):
    fails = []
    rng = ctx.rng("thm3.2")
    top = min(6, ctx.max_n)
    order = 2 * (2 * top + 1)
    for trial in range(20):
        b = _rand_weight(rng, order)
        a = _rand_unit(rng, order)
        xabar = a.mul_x().reversion()
        abar = xabar.div_x()
        image_b = b.compose(xabar) * xabar.derivative()
        for n in range(top + 1):
            h = narayana_numerator(b, a, n).poly
            _neq(fails, "eval trial=%d n=%d" % (trial, n), h.eval(1),
                 b.coeffs[0] * a.coeffs[1] ** n * Q(factorial(2 * n), factorial(n)))
            rhs = narayana_numerator(image_b, abar, n).poly
            _neq(fails, "trial=%d n=%d" % (trial, n), rhs,
                 Q(-1) ** n * h.reverse())
    return fails


def _chk_thm41(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        want = (core_matrix("Vinv", n) * exp_matrix("C", n) * core_matrix("V", n))
        _neq(fails, "n=%d" % n, exp_matrix("S", n), want)
    rng = ctx.rng("thm4.1")
    top = min(6, ctx.max_n)
    order = 2 * (2 * top + 1)
    for trial in range(20):
        b = _rand_weight(rng, order)
        a = _rand_unit(rng, order)
        for n in range(1, top + 1):
            g = euler_numerator(b, a, n).poly
            h = narayana_numerator(b, a, n).poly
            _neq(fails, "map trial=%d n=%d" % (trial, n),
                 exp_matrix("S", n).apply(g), h)
    return fails


def _chk_thm42(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        try:
            s = exp_matrix("S", n)
        except ConsistencyError as err:
            fails.append("n=%d: %s" % (n, err))
            continue
        _neq(fails, "inverse pair n=%d" % n, s * exp_matrix("Sinv", n),
             FinMatrix.identity(n + 1))
    return fails


def _chk_thm43(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        try:
            sinv = exp_matrix("Sinv", n)
        except ConsistencyError as err:
            fails.append("n=%d: %s" % (n, err))
            continue
        _neq(fails, "inverse n=%d" % n, sinv, exp_matrix("S", n).inverse())
    return fails


def _chk_thm44(ctx):
    fails = []
    top = min(4, ctx.max_n)
    order = 2 * (2 * top + 1)
    for c in (Q(1), Q(2), Q(1, 2)):
        a = Series([c ** k for k in range(order + 1)], order)
        for n in range(1, top + 1):
            h = narayana_numerator(a, a, n).poly
            _neq(fails, "geometric c=%s n=%d" % (c, n), h.reverse(), h)
    perturbed = Series.from_poly([1, 1, 2], order)
    if all(narayana_numerator(perturbed, perturbed, n).poly.reverse()
           == narayana_numerator(perturbed, perturbed, n).poly
           for n in range(1, top + 1)):
        fails.append("perturbed series kept symmetric numerators up to n=%d" % top)
    return fails


def _chk_thm45(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        _neq(fails, "beta=0 n=%d" % n, beta_phi_closed(n, 0),
             Q(factorial(2 * n), factorial(n)) * Poly.monomial(n))
        _neq(fails, "beta=2 n=%d" % n, beta_phi_closed(n, 2),
             Q(factorial(2 * n), factorial(n)) * Poly([0, 1]))
        for beta in ctx.betas:
            dual = (Poly([0, 1]) * beta_phi_closed(n, beta).reverse()).with_bound(n)
            _neq(fails, "duality beta=%s n=%d" % (beta, n),
                 beta_phi_closed(n, 2 - beta), dual)
    return fails


def _chk_eq3(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        order = 2 * (2 * n + 1)
        for beta in ctx.betas:
            series = beta_family(beta, 1, order)
            got = phi_poly(series, n)
            _neq(fails, "n=%d beta=%s" % (n, beta), got, beta_phi_closed(n, beta))
    return fails


def _chk_thm61(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        j = core_matrix("J", n)
        for beta in ctx.betas:
            _neq(fails, "n=%d beta=%s" % (n, beta), beta_matrix("G", n, -beta),
                 j * beta_matrix("G", n, beta) * j)
    return fails


def _chk_thm62(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        v = core_matrix("V", n)
        vinv = core_matrix("Vinv", n)
        for beta in ctx.betas:
            nb = n * beta
            if nb.denominator != 1:
                continue
            want = vinv * _binom_band_T(nb, n + 1) * v
            _neq(fails, "n=%d beta=%s" % (n, beta), beta_matrix("G", n, beta), want)
    return fails


def _chk_thm63(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        x = beta_matrix("X", n)
        powers = [FinMatrix.identity(n + 1)]
        for _ in range(n):
            powers.append(powers[-1] * x)
        for beta in ctx.betas:
            try:
                g = beta_matrix("G", n, beta)
            except ConsistencyError as err:
                fails.append("n=%d beta=%s: %s" % (n, beta, err))
                continue
            acc = FinMatrix.zeros(n + 1, n + 1)
            for m in range(n + 1):
                acc = acc + exact.binom(n * beta, m) * powers[m]
            _neq(fails, "nilpotent sum n=%d beta=%s" % (n, beta), acc, g)
            for m in range(1, n):
                red = (mult_op(Series.geometric(n).pow(m), n - m + 1, n + 1) * g
                       * mult_op(Poly([1, -1]) ** m, n + 1, n - m + 1))
                want = beta_matrix("G", n - m, n * beta / (n - m))
                _neq(fails, "reduction n=%d m=%d beta=%s" % (n, m, beta), red, want)
        _neq(fails, "unit root n=%d" % n, beta_matrix("G", n, Q(1, n)),
             FinMatrix.identity(n + 1) + x)
    return fails


def _chk_thm71(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        j = core_matrix("J", n)
        for beta in ctx.betas:
            _neq(fails, "n=%d beta=%s" % (n, beta), beta_matrix("H", n, -beta),
                 j * beta_matrix("H", n, beta) * j)
    return fails


def _chk_thm72(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        for beta in ctx.betas:
            try:
                h = beta_matrix("H", n, beta)
            except ConsistencyError as err:
                fails.append("n=%d beta=%s: %s" % (n, beta, err))
                continue
            nb = n * beta
            top = Poly([exact.binom(2 * n - nb, m) * exact.binom(nb, n - m)
                        for m in range(n + 1)], n) * Q(1, comb(2 * n, n))
            _neq(fails, "last column n=%d beta=%s" % (n, beta),
                 h.column_poly(n), top)
            first = Poly([exact.binom(-nb, m) * exact.binom(nb + 2 * n, n - m)
                          for m in range(n + 1)], n) * Q(1, comb(2 * n, n))
            _neq(fails, "first column n=%d beta=%s" % (n, beta),
                 h.column_poly(0), first)
    return fails


def _chk_thm81(ctx):
    fails = []
    for n in range(2, ctx.max_n + 1):
        lhs = tilde_matrix("Ut", n) * alt_matrix(n) * tilde_matrix("Utinv", n)
        _neq(fails, "n=%d" % n, lhs, tilde_matrix("Jt", n) * Q(-1) ** (n - 1))
    return fails


def _chk_thm82(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        for m in range(1, 5):
            try:
                W_matrix(n, m)
            except ConsistencyError as err:
                fails.append("n=%d m=%d: %s" % (n, m, err))
    return fails


def _chk_thm83(ctx):
    fails = []
    for n in range(2, ctx.max_n + 1):
        lhs = (tilde_matrix("Ft", n) * shift_matrix(n, n) * alt_matrix(n)
               * tilde_matrix("Ftinv", n))
        _neq(fails, "n=%d" % n, lhs, tilde_matrix("Jt", n) * Q(-1) ** (n - 1))
    for n in range(ctx.max_n + 1):
        for p in range(n + 1):
            s1 = sum(Q(-1) ** (n - m) * comb(2 * n + 1, n - m) * Q(m) ** p
                     * comb(m + n, n) for m in range(n + 1))
            _neq(fails, "column element n=%d p=%d" % (n, p), s1,
                 Q(-1) ** (n + p) * Q(n + 1) ** p)
            s2 = sum(Q(-1) ** (n - m) * comb(2 * n + 1, n - m) * Q(m + 1) ** p
                     * comb(m + n, n) for m in range(n + 1))
            _neq(fails, "shifted column element n=%d p=%d" % (n, p), s2,
                 Q(-1) ** (n + p) * Q(n) ** p)
    return fails


def _chk_thm91(ctx):
    fails = []
    for n in range(2, ctx.max_n + 1):
        j = tilde_matrix("Jt", n)
        for beta in ctx.betas:
            _neq(fails, "n=%d beta=%s" % (n, beta), beta_matrix("A", n, -beta),
                 j * beta_matrix("A", n, beta) * j)
    return fails


def _chk_thm92(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        vt = tilde_matrix("Vt", n)
        dt = tilde_matrix("Dt", n)
        for beta in ctx.betas:
            nb = n * beta
            if nb.denominator != 1:
                continue
            want = vt.inverse() * dt * _binom_band_T(nb, n) * dt.inverse() * vt
            _neq(fails, "n=%d beta=%s" % (n, beta), beta_matrix("A", n, beta), want)
    return fails


def _chk_thm93(ctx):
    fails = []
    for n in range(1, ctx.max_n + 1):
        for beta in ctx.betas:
            try:
                a = beta_matrix("A", n, beta)
            except ConsistencyError as err:
                fails.append("n=%d beta=%s: %s" % (n, beta, err))
                continue
            want_last = beta_alpha_closed(n, beta).divexact(Poly([0, 1]))
            _neq(fails, "last column n=%d beta=%s" % (n, beta),
                 n * a.column_poly(n - 1), (n * want_last).with_bound(n - 1))
            want_first = beta_alpha_closed(n, 1 + beta).divexact(Poly([0, 1]))
            _neq(fails, "first column n=%d beta=%s" % (n, beta),
                 n * a.column_poly(0), (n * want_first).with_bound(n - 1))
        for m in range(1, n):
            g = beta_matrix("A", n, Q(1))
            red = (mult_op(Series.geometric(n).pow(m), n - m, n) * g
                   * mult_op(Poly([1, -1]) ** m, n, n - m))
            _neq(fails, "reduction n=%d m=%d" % (n, m), red,
                 beta_matrix("A", n - m, Q(n, n - m)))
    return fails


def _chk_thm94(ctx):
    fails = []
    for n in range(2, ctx.max_n + 1):
        j = tilde_matrix("Jt", n)
        for beta in ctx.betas:
            _neq(fails, "n=%d beta=%s" % (n, beta), beta_matrix("T", n, -beta),
                 j * beta_matrix("T", n, beta) * j)
    return fails


def _chk_thm95(ctx):
    fails = []
    scale = lambda n: Q(factorial(2 * n), factorial(n))
    for n in range(1, ctx.max_n + 1):
        for beta in ctx.betas:
            try:
                t = beta_matrix("T", n, beta)
            except ConsistencyError as err:
                fails.append("n=%d beta=%s: %s" % (n, beta, err))
                continue
            want_last = beta_phi_closed(n, beta).divexact(Poly([0, 1]))
            _neq(fails, "last column n=%d beta=%s" % (n, beta),
                 scale(n) * t.column_poly(n - 1), want_last.with_bound(n - 1))
            want_first = beta_phi_closed(n, 2 + beta).divexact(Poly([0, 1]))
            _neq(fails, "first column n=%d beta=%s" % (n, beta),
                 scale(n) * t.column_poly(0), want_first.with_bound(n - 1))
    return fails


# -- worked examples ----------------------------------------------------------


def _chk_ex21(ctx):
    fails = []
    top = min(5, ctx.max_n)
    order = 2 * top + 2
    a = (Series.from_poly([1, 1], order) / Series.from_poly([1, -1], order))
    half_plus_x = Poly([Q(1, 2), 1])
    for n in range(1, top + 1):
        v = []
        p = Series.one(n)
        am1 = a.truncate(n) - 1
        for m in range(n + 1):
            v.append(p.coeffs[n])
            if m < n:
                p = p * am1
        _neq(fails, "v_%d" % n, Poly(v, n),
             Q(2) ** n * Poly([0, 1]) * half_plus_x ** (n - 1))
        alpha = alpha_poly(a, n)
        _neq(fails, "alpha_%d" % n, alpha,
             2 * Poly([0, 1]) * Poly([1, 1]) ** (n - 1))
        u = RiordanArray(Series.one(order), a.log(), EXPONENTIAL).sheffer_row(n)
        want1 = Poly.zero(n)
        want2 = Poly.zero(n)
        for p_ in range(n + 1):
            want1 = want1 + (2 * exact.binom(n - 1, p_ - 1)
                             * exact.falling_poly(p_) * exact.rising_from(1, n - p_))
        for p_ in range(n + 1):
            want2 = want2 + (factorial(n) * exact.binom(n - 1, p_ - 1)
                             * Q(2 ** p_, factorial(p_)) * exact.falling_poly(p_))
        _neq(fails, "u_%d (factorial form)" % n, u, want1.with_bound(n))
        _neq(fails, "u_%d (descending form)" % n, u, want2.with_bound(n))
    return fails


def _chk_ex22(ctx):
    fails = []
    top = 4
    order = 4 * top + 2
    half_sq = Series.from_poly([1, 0, Q(1, 4)], order).sqrt()
    g = half_sq + Series.from_poly([0, Q(1, 2)], order)
    b = Series.from_poly([1, 1], order).sqrt()
    _neq(fails, "lagrange pair of sqrt(1+x)", lagrange_pair(b), g)
    arr = RiordanArray(Series.one(order), g.mul_x().truncate(order))
    half_plus_x = Poly([Q(1, 2), 1])
    for n in range(1, top + 1):
        want = half_plus_x * Poly.monomial(n) * Poly([1, 1]) ** (n - 1)
        _neq(fails, "row %d" % (2 * n), arr.row_poly(2 * n),
             want.with_bound(2 * n))
    asq = g * g
    _neq(fails, "square equals the half-parameter family",
         asq, gen_binomial_series(Q(1, 2), 1, order))
    for n in range(1, top + 1):
        _neq(fails, "alpha_%d" % (2 * n), alpha_poly(asq, 2 * n),
             Q(1, 2) * Poly([1, 1]) * Poly.monomial(n))
        u = RiordanArray(Series.one(order), asq.log(), EXPONENTIAL).sheffer_row(2 * n)
        want = Poly.one()
        for m in range(n):
            want = want * Poly([-Q(m * m), 0, 1])
        _neq(fails, "u_%d" % (2 * n), u, want.with_bound(2 * n))
    return fails


def _chk_ex23(ctx):
    fails = []
    phi, beta = Q(1), Q(1)
    order_x, order_t = 8, 6
    denom = Series.from_poly([1, phi, beta], 2 * order_x + 2)
    a = denom.inverse()
    if not alpha_gf_check(a, order_x, order_t):
        fails.append("bivariate generating identity fails")
    from . import bivariate as bv
    one_minus_t = [Q(1), Q(-1)] + [Q(0)] * (order_t - 1)
    num = [bv.t_const(1, order_t),
           bv.t_scale(one_minus_t, phi),
           bv.t_scale(bv.t_mul(one_minus_t, one_minus_t), beta)]
    num += [bv.t_zero(order_t)] * (order_x - 2)
    den = [bv.t_const(1, order_t), bv.t_const(phi, order_t),
           bv.t_scale(one_minus_t, beta)]
    den += [bv.t_zero(order_t)] * (order_x - 2)
    closed = bv.x_mul(num, bv.x_inv(den))
    for n in range(order_x + 1):
        alpha = alpha_poly(a, n)
        if [alpha.coeff(j) for j in range(order_t + 1)] != closed[n]:
            fails.append("closed rational form differs at x^%d" % n)
    return fails


def _chk_ex31(ctx):
    fails = []
    top = min(5, ctx.max_n)
    order = 2 * (2 * top + 1)
    cat = _catalan(order)
    for n in range(1, top + 1):
        u = RiordanArray(Series.one(order), cat.log(), EXPONENTIAL).sheffer_row(n)
        _neq(fails, "u_%d over x" % n, u.divexact(Poly([0, 1])),
             exact.rising_from(n + 1, n - 1).with_bound(n - 1))
        lifted = exact.rising_from(n + 1, n).with_bound(n)
        _neq(fails, "constant image n=%d" % n, exp_matrix("F", n).apply(lifted),
             Poly([Q(factorial(2 * n), factorial(n))], 0).with_bound(n))
        _neq(fails, "monomial numerator n=%d" % n, phi_poly(cat, n),
             Q(factorial(2 * n), factorial(n)) * Poly([0, 1]))
    rng = ctx.rng("ex3.1")
    for trial in range(20):
        a = _rand_unit(rng, 10)
        pref = 1 + xdlog(a)
        deriv = a.mul_x().derivative()
        for m in range(1, 10):
            am = a.pow(m)
            for n in range(0, 10 - m + 1):
                _neq(fails, "log identity trial=%d n=%d m=%d" % (trial, n, m),
                     (pref * am).coeffs[n], Q(m + n, m) * am.coeffs[n])
        for m in range(0, 10):
            am1 = a.pow(m + 1)
            lhs = deriv * a.pow(m)
            for n in range(0, 10 - m + 1):
                _neq(fails, "derivative identity trial=%d n=%d m=%d" % (trial, n, m),
                     lhs.coeffs[n], Q(m + n + 1, m + 1) * am1.coeffs[n])
    return fails


def _chk_ex32(ctx):
    fails = []
    top = min(6, ctx.max_n)
    order = 2 * (2 * top + 1)
    geo = Series.geometric(order)
    for n in range(1, top + 1):
        _neq(fails, "phi_%d" % n, phi_poly(geo, n), beta_phi_closed(n, 1))
    if not phi_gf_check(Series.geometric(2 * (2 * 8 + 1)), 8, 6):
        fails.append("bivariate exponential generating identity fails")
    for tau in (Q(1, 2), Q(-1), Q(2)):
        n_ord = 10
        inner = Series.from_poly([1, -2 * (1 + tau), (1 - tau) ** 2], n_ord + 1)
        closed = ((1 + (1 - tau) * Series.x(n_ord + 1) - inner.sqrt())
                  .div_x() / 2)
        lhs = []
        for n in range(n_ord + 1):
            if n == 0:
                lhs.append(Q(1))
            else:
                lhs.append(beta_phi_closed(n, 1).eval(tau) / factorial(n + 1))
        _neq(fails, "closed form at t=%s" % tau, Series(lhs, n_ord), closed)
    return fails


def _chk_ex41(ctx):
    fails = []
    top = min(6, ctx.max_n)
    order = 2 * (2 * top + 1)
    geo = Series.geometric(order)
    for n in range(top + 1):
        _neq(fails, "flat numerator n=%d" % n,
             euler_numerator(geo, geo, n).poly, Poly.one().with_bound(n))
    for n in range(1, top + 1):
        type_b = Poly([comb(n, m) ** 2 for m in range(n + 1)], n)
        _neq(fails, "type-B column n=%d" % n,
             exp_matrix("S", n).column_poly(0), factorial(n) * type_b)
        _neq(fails, "exponential image n=%d" % n,
             narayana_numerator(geo, geo, n).poly, factorial(n) * type_b)
    return fails


def _chk_ex42(ctx):
    fails = []
    top = min(6, ctx.max_n)
    order = 2 * (2 * top + 1)
    one_plus_x = Series.from_poly([1, 1], order)
    cat = _catalan(order + 1)
    pref = 1 + xdlog(cat)
    for n in range(1, top + 1):
        _neq(fails, "ordinary numerator n=%d" % n,
             euler_numerator(one_plus_x, one_plus_x, n).poly,
             Poly.monomial(n - 1).with_bound(n))
        want = (Q(factorial(2 * n), 2 * factorial(n)) * Poly([1, 1])
                * Poly.monomial(n - 1))
        _neq(fails, "exponential numerator n=%d" % n,
             narayana_numerator(one_plus_x, one_plus_x, n).poly,
             want.with_bound(n))
        _neq(fails, "reversed image n=%d" % n,
             narayana_numerator(pref, cat.truncate(order), n).poly,
             (Q(factorial(2 * n), 2 * factorial(n)) * Poly([1, 1])).with_bound(n))
    return fails


def _chk_ex43(ctx):
    fails = []
    top = min(6, ctx.max_n)
    order = 2 * (2 * top + 1)
    cat = _catalan(order + 1)
    deriv = cat.mul_x().derivative()
    pref = 1 + xdlog(cat)
    for n in range(1, top + 1):
        scale = Q(factorial(2 * n), factorial(n))
        _neq(fails, "constant numerator n=%d" % n,
             narayana_numerator(deriv, cat.truncate(order), n).poly,
             Poly([scale], 0).with_bound(n))
        _neq(fails, "ordinary numerator n=%d" % n,
             euler_numerator(deriv, cat.truncate(order), n).poly,
             (scale * exp_matrix("Sinv", n).column_poly(0)).with_bound(n))
        want = Q(-1) ** n * Poly([comb(2 * n, m) * exact.binom(-n, n - m)
                                  for m in range(n + 1)], n)
        _neq(fails, "reciprocal numerator n=%d" % n,
             euler_numerator(pref, cat.inverse().truncate(order), n).poly, want)
    return fails


def _chk_ex61(ctx):
    fails = []
    top = min(5, ctx.max_n)
    order = 2 * top + 2
    for beta in ctx.betas:
        for n in range(1, top + 1):
            g = beta_matrix("G", n, beta)
            fam = beta_family(beta, 1, order)
            fam_beta = beta_family(beta, beta, order)
            fam1 = beta_family(beta + 1, 1, order)
            fam1_beta = beta_family(beta + 1, beta, order)
            pref = 1 + xdlog(fam_beta)
            pref1 = 1 + xdlog(fam1_beta)
            _neq(fails, "top column n=%d beta=%s" % (n, beta),
                 g.column_poly(n), euler_numerator(pref, fam, n).poly)
            _neq(fails, "linear column n=%d beta=%s" % (n, beta),
                 g.column_poly(1), euler_numerator(pref1, fam1, n).poly)
            _neq(fails, "subtop column n=%d beta=%s" % (n, beta),
                 g.column_poly(n - 1),
                 euler_numerator(fam * pref, fam, n).poly)
            _neq(fails, "first column n=%d beta=%s" % (n, beta),
                 g.column_poly(0),
                 euler_numerator(fam1 * pref1, fam1, n).poly)
    rng = ctx.rng("ex6.1")
    for trial in range(8):
        a = _rand_unit(rng, order + 1)
        for beta in (Q(1), Q(2)):
            lag = gen_lagrange_series(a, beta, order)
            h = a.pow(-beta).mul_x().reversion()
            image_b = (1 + xdlog(h.div_x()))
            for n in range(1, top + 1):
                g_n = euler_numerator(Series.one(order + 1), a, n).poly
                want = euler_numerator(image_b, lag, n).poly
                _neq(fails, "transport trial=%d beta=%s n=%d" % (trial, beta, n),
                     beta_matrix("G", n, beta).apply(g_n), want)
    return fails


def _chk_ex71(ctx):
    fails = []
    top = min(4, ctx.max_n)
    order = 2 * (2 * top + 1)
    for beta in (Q(0), Q(1), Q(2)):
        fam = beta_family(beta, 1, order + 1)
        fam_beta = beta_family(beta, beta, order + 1)
        pref = (1 + xdlog(fam_beta)) if beta != 0 else Series.one(order)
        for n in range(1, top + 1):
            scale = Q(factorial(2 * n), factorial(n))
            want = narayana_numerator(pref.truncate(order), fam.truncate(order), n).poly
            _neq(fails, "top column beta=%s n=%d" % (beta, n),
                 scale * beta_matrix("H", n, beta).column_poly(n), want)
    for n in range(1, min(6, ctx.max_n) + 1):
        for beta in ctx.betas:
            h = beta_matrix("H", n, beta)
            nb = n * beta
            arg = (Poly([1, 1]) * Poly.monomial(n - 1)).with_bound(n)
            lhs = comb(2 * n - 1, n - 1) * h.apply(arg)
            want = Poly([exact.binom(2 * n - 1 - nb, m) * exact.binom(nb + 1, n - m)
                         for m in range(n + 1)], n)
            _neq(fails, "palindromic pair n=%d beta=%s" % (n, beta), lhs, want)
        for beta in ctx.betas:
            h = beta_matrix("H", n, beta)
            nb = n * beta
            arg = Poly([1, 1], n)
            lhs = comb(2 * n - 1, n - 1) * h.apply(arg)
            want = Poly([exact.binom(1 - nb, m) * exact.binom(nb + 2 * n - 1, n - m)
                         for m in range(n + 1)], n)
            _neq(fails, "ones pair n=%d beta=%s" % (n, beta), lhs, want)
    return fails


def _chk_ex81(ctx):
    fails = []
    window = (Poly([1, 1]) ** 3).to_series(6)
    _neq(fails, "3-fold window stride 2", strided_matrix(window, 2, 2),
         _M([[3, 1], [1, 3]]))
    window4 = (Poly([1, 1]) ** 4).to_series(8)
    _neq(fails, "4-fold window stride 2", strided_matrix(window4, 2, 3),
         _FIX_W[(3, 2)])
    rng = ctx.rng("ex8.1")
    a = _rand_series(rng, 8, rng.randint(1, 3))
    got = strided_matrix(a, 1, 4)
    want = FinMatrix([[a.coeffs[i - j] if i >= j else Q(0) for j in range(4)]
                      for i in range(4)])
    _neq(fails, "unit stride is the plain row shift", got, want)
    return fails


# -- generating functions and the section-5 machinery -------------------------


def _chk_eq1(ctx):
    fails = []
    rng = ctx.rng("eq1")
    for trial in range(10):
        a = _rand_unit(rng, 2 * (2 * 12 + 1))
        if not alpha_gf_check(a, 12, 8):
            fails.append("ordinary families trial=%d" % trial)
        if not phi_gf_check(a, 12, 8):
            fails.append("exponential families trial=%d" % trial)
    return fails


def _chk_w_amazing(ctx):
    fails = []
    top = min(6, ctx.max_n)
    for n in range(1, top + 1):
        jt = tilde_matrix("Jt", n) if n >= 2 else FinMatrix.identity(1)
        vt = tilde_matrix("Vt", n)
        a_t = exact.eulerian_poly(n).divexact(Poly([0, 1])).with_bound(n - 1)
        for m in range(1, 5):
            w = W_matrix(n, m)
            sums = w.column_sums()
            if any(s != Q(m) ** n for s in sums):
                fails.append("column sums n=%d m=%d: %s" % (n, m, sums))
            _neq(fails, "eigenvector n=%d m=%d" % (n, m), w.apply(a_t),
                 Q(m) ** n * a_t)
            _neq(fails, "reversal commutes n=%d m=%d" % (n, m), w * jt, jt * w)
            shifted = Poly([1, 1]) ** m - 1
            mid = FinMatrix([[(shifted ** (i + 1)).coeff(j + 1) for j in range(n)]
                             for i in range(n)])
            _neq(fails, "band factorization n=%d m=%d" % (n, m),
                 vt.inverse() * mid * vt, w)
            for p in range(1, 5):
                _neq(fails, "product n=%d m=%d p=%d" % (n, m, p),
                     W_matrix(n, m) * W_matrix(n, p), W_matrix(n, m * p))
            for p in range(1, n):
                red = (mult_op(Series.geometric(n).pow(p), n - p, n) * w
                       * mult_op(Poly([1, -1]) ** p, n, n - p))
                _neq(fails, "reduction n=%d m=%d p=%d" % (n, m, p), red,
                     W_matrix(n - p, m))
    return fails


def _chk_col_sums(ctx):
    fails = []
    top = min(6, ctx.max_n)
    for n in range(1, top + 1):
        for beta in ctx.betas:
            for kind in ("G", "H"):
                sums = beta_matrix(kind, n, beta).column_sums()
                if any(s != 1 for s in sums):
                    fails.append("%s n=%d beta=%s: %s" % (kind, n, beta, sums))
    return fails


def _chk_section5(ctx):
    """Lagrange-pair coefficients, fixed points, the u/q system, and the
    diagonal re-reading round trip."""
    fails = []
    rng = ctx.rng("section5")
    for trial in range(20):
        a = _rand_unit(rng, 11)
        b = lagrange_pair(a)
        powers_b = [Series.one(11)]
        powers_a = [Series.one(11)]
        for _ in range(11):
            powers_b.append(powers_b[-1] * b)
            powers_a.append(powers_a[-1] * a)
        for m in range(1, 11):
            for n in range(0, 11 - m):
                lhs = powers_b[m].coeffs[n]
                rhs = Q(m, m + n) * powers_a[m + n].coeffs[n]
                _neq(fails, "pair trial=%d n=%d m=%d" % (trial, n, m), lhs, rhs)
    for trial in range(6):
        a = _rand_unit(rng, 13)
        for beta in (Q(1), Q(-1), Q(1, 2), Q(2)):
            lag = gen_lagrange_series(a, beta, 12)
            inner = lag.pow(beta).mul_x()
            _neq(fails, "fixed point trial=%d beta=%s" % (trial, beta),
                 a.compose(inner), lag)
    ex = Series.from_poly([0, 1], 14).exp()
    for beta in (Q(1), Q(2), Q(-1)):
        lag = gen_lagrange_series(ex, beta, 12)
        us = u_polys(ex, 8)
        lag_us = u_polys(lag, 8)
        for n in range(8 + 1):
            _neq(fails, "u transform beta=%s n=%d" % (beta, n),
                 beta_u_transform(us[n], n, beta), lag_us[n])
        for n in range(5):
            _neq(fails, "q transform beta=%s n=%d" % (beta, n),
                 beta_q_transform(q_series(ex, n, 8), n, beta),
                 q_series(lag, n, 8))
        grid = [[Q(0)] * 9 for _ in range(9)]
        for n in range(9):
            un = beta_u_transform(us[n], n, beta)
            qn = beta_q_transform(q_series(ex, n, 8), n, beta)
            for i in range(9):
                for j in range(min(n, 8) + 1):
                    grid[i][j] += qn.coeffs[i] * un.coeff(j)
        for i in range(9):
            for j in range(9):
                want = Q(1) if i == j else Q(0)
                if grid[i][j] != want:
                    fails.append("resolvent sum beta=%s at x^%d phi^%d" % (beta, i, j))
    rng2 = ctx.rng("section5-tables")
    for trial in range(5):
        b = _rand_weight(rng2, 10)
        a = _rand_unit(rng2, 10)
        phi = Q(rng2.randint(1, 3), rng2.randint(1, 2))
        for v in (1, -1, 2):
            image_b = table_row(b, a, phi, v, 0, 8)
            image_a = gen_lagrange_series(a, v * phi, 9)
            for k in range(-2, 3):
                back = table_row(image_b, image_a, phi, -v, k, 8)
                _neq(fails, "round trip trial=%d v=%d k=%d" % (trial, v, k),
                     back, (b * a.pow(phi * k)).truncate(8))
    b = Series.one(12)
    am = Series.from_poly([1, -1], 12)
    for k in range(-8, 9):
        row = table_row(b, am, -1, 1, k, 8)
        want = Series([am.pow(Q(-1) * (k + n)).coeffs[n] for n in range(9)], 8)
        _neq(fails, "ascending diagonal k=%d" % k, row, want)
    return fails


_CHECKS = [
    ("fixtures", _chk_fixtures),
    ("thm2.1", _chk_thm21),
    ("thm2.2", _chk_thm22),
    ("thm2.3", _chk_thm23),
    ("thm2.4", _chk_thm24),
    ("thm2.5", _chk_thm25),
    ("thm3.1", _chk_thm31),
    ("thm3.2", _chk_thm32),
    ("thm4.1", _chk_thm41),
    ("thm4.2", _chk_thm42),
    ("thm4.3", _chk_thm43),
    ("thm4.4", _chk_thm44),
    ("thm4.5", _chk_thm45),
    ("thm6.1", _chk_thm61),
    ("thm6.2", _chk_thm62),
    ("thm6.3", _chk_thm63),
    ("thm7.1", _chk_thm71),
    ("thm7.2", _chk_thm72),
    ("thm8.1", _chk_thm81),
    ("thm8.2", _chk_thm82),
    ("thm8.3", _chk_thm83),
    ("thm9.1", _chk_thm91),
    ("thm9.2", _chk_thm92),
    ("thm9.3", _chk_thm93),
    ("thm9.4", _chk_thm94),
    ("thm9.5", _chk_thm95),
    ("ex2.1", _chk_ex21),
    ("ex2.2", _chk_ex22),
    ("ex2.3", _chk_ex23),
    ("ex3.1", _chk_ex31),
    ("ex3.2", _chk_ex32),
    ("ex4.1", _chk_ex41),
    ("ex4.2", _chk_ex42),
    ("ex4.3", _chk_ex43),
    ("ex6.1", _chk_ex61),
    ("ex7.1", _chk_ex71),
    ("ex8.1", _chk_ex81),
    ("eq1", _chk_eq1),
    ("eq2", _chk_eq2),
    ("eq3", _chk_eq3),
    ("section5", _chk_section5),
    ("w-amazing", _chk_w_amazing),
    ("col-sums", _chk_col_sums),
]

CHECK_NAMES = tuple(name for name, _ in _CHECKS)


def run_suite(suite: str = "all", max_n: int = 8, betas=DEFAULT_BETAS,
              seed: int = DEFAULT_SEED) -> Report:
    """Run one named check or the whole battery."""
    ctx = _Ctx(max_n, betas, seed)
    table = dict(_CHECKS)
    if suite == "all":
        names = CHECK_NAMES
    elif suite in table:
        names = (suite,)
    else:
        raise KeyError("unknown suite %r; choose from 'all', %s"
                       % (suite, ", ".join(CHECK_NAMES)))
    report = Report(suite)
    for name in names:
        try:
            fails = table[name](ctx)
        except Exception as err:  # a crash is a failure with a payload
            fails = ["raised %s: %s" % (type(err).__name__, err)]
        detail = "; ".join(fails[:4])
        if len(fails) > 4:
            detail += "; and %d more" % (len(fails) - 4)
        report.results.append(CheckResult(name, not fails, detail))
    return report
