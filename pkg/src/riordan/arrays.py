"""Riordan arrays in three flavors, the group law, and row machinery.

An ordinary pair (f, g) with g(0) = 0 is the lower-triangular matrix
whose column m has generating function f*g^m.  The exponential flavor
conjugates by the diagonal 1/n! matrix, so its (n, m) entry carries an
extra n!/m!.  A square pair (b, a) with a(0) = 1 is the full matrix
whose column m has generating function b*a^m; its row n equals the
n-th descending diagonal of (b, x*a).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .fps import DomainError, Poly, Q, RangeError, Series, _q, xdlog

ORDINARY = "ordinary"
EXPONENTIAL = "exponential"
SQUARE = "square"

ROW = "row"
COLUMN = "column"
DIAGONAL = "diagonal"


@dataclass(frozen=True)
class TriangleSlice:
    entries: tuple
    kind: str
    index: int

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]


class RiordanArray:
    __slots__ = ("f", "g", "flavor", "order")

    def __init__(self, f: Series, g: Series, flavor: str = ORDINARY):
        if flavor in (ORDINARY, EXPONENTIAL):
            if g.coeffs[0] != 0:
                raise DomainError("triangular flavor needs g(0) = 0")
        elif flavor == SQUARE:
            if g.coeffs[0] != 1:
                raise DomainError("square flavor needs column series with a(0) = 1")
            if f.coeffs[0] == 0:
                raise DomainError("square flavor needs b(0) != 0")
        else:
            raise ValueError("unknown flavor %r" % (flavor,))
        self.f = f
        self.g = g
        self.flavor = flavor
        self.order = min(f.order, g.order)

    @classmethod
    def identity(cls, order: int, flavor: str = ORDINARY) -> "RiordanArray":
        return cls(Series.one(order), Series.x(order), flavor)

    def is_proper(self) -> bool:
        if self.flavor == SQUARE:
            return False
        return self.f.coeffs[0] != 0 and self.g.order >= 1 and self.g.coeffs[1] != 0

    # -- entries ---------------------------------------------------------

    def _weight(self, n: int, m: int) -> Fraction:
        if self.flavor == EXPONENTIAL:
            return Q(factorial(n), factorial(m))
        return Q(1)

    def entry(self, n: int, m: int) -> Fraction:
        if n > self.order:
            raise RangeError("row %d beyond order %d" % (n, self.order))
        if self.flavor != SQUARE and m > n:
            return Q(0)
        p = self.f.truncate(n) * self.g.truncate(n).pow(m)
        return self._weight(n, m) * p.coeffs[n]

    def row(self, n: int) -> TriangleSlice:
        """Row n: length n+1 for triangular flavors, order+1 for square."""
        if n > self.order:
            raise RangeError("row %d beyond order %d" % (n, self.order))
        top = n if self.flavor != SQUARE else self.order
        f, g = self.f.truncate(n), self.g.truncate(n)
        out = []
        p = f
        for m in range(top + 1):
            out.append(self._weight(n, m) * p.coeffs[n])
            if m < top:
                p = p * g
        return TriangleSlice(tuple(out), ROW, n)

    def row_poly(self, n: int) -> Poly:
        s = self.row(n)
        return Poly(list(s.entries), len(s.entries) - 1)

    def column(self, m: int) -> TriangleSlice:
        """Column m materialized to the array order."""
        if self.flavor != SQUARE and m > self.order:
            raise RangeError("column %d beyond order %d" % (m, self.order))
        p = self.f * self.g.pow(m)
        out = [self._weight(n, m) * p.coeffs[n] for n in range(self.order + 1)]
        return TriangleSlice(tuple(out), COLUMN, m)

    def column_series(self, m: int) -> Series:
        return Series(list(self.column(m).entries), self.order)

    def diagonal(self, n: int) -> TriangleSlice:
        """Descending diagonal n: entries (n+m, m) for m = 0..order-n."""
        if n > self.order:
            raise RangeError("diagonal %d beyond order %d" % (n, self.order))
        out = []
        p = self.f
        for m in range(self.order - n + 1):
            out.append(self._weight(n + m, m) * p.coeffs[n + m])
            if m < self.order - n:
                p = p * self.g
        return TriangleSlice(tuple(out), DIAGONAL, n)

    def materialize(self, kind: str, n: int) -> TriangleSlice:
        if kind == ROW:
            return self.row(n)
        if kind == COLUMN:
            return self.column(n)
        if kind == DIAGONAL:
            return self.diagonal(n)
        raise ValueError("unknown slice kind %r" % (kind,))

    # -- group structure ---------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, RiordanArray):
            return NotImplemented
        if self.flavor != other.flavor:
            raise DomainError("flavor mismatch in Riordan product")
        if self.flavor == SQUARE:
            raise DomainError("square arrays have no group product here")
        return RiordanArray(self.f * other.f.compose(self.g),
                            other.g.compose(self.g), self.flavor)

    def inverse(self) -> "RiordanArray":
        if self.flavor == SQUARE:
            raise DomainError("square arrays have no group inverse here")
        if not self.is_proper():
            raise DomainError("only proper arrays invert")
        gbar = self.g.reversion()
        return RiordanArray(self.f.compose(gbar).inverse(), gbar, self.flavor)

    # -- Sheffer rows -------------------------------------------------------

    def sheffer_row(self, n: int) -> Poly:
        """Row n of an exponential array as a polynomial in the row
        argument: coefficient j is (n!/j!) [x^n] f*g^j."""
        if self.flavor != EXPONENTIAL:
            raise DomainError("Sheffer rows belong to the exponential flavor")
        if n > self.order:
            raise RangeError("row %d beyond order %d" % (n, self.order))
        f, g = self.f.truncate(n), self.g.truncate(n)
        fact_n = factorial(n)
        out = []
        p = f
        for j in range(n + 1):
            out.append(Q(fact_n, factorial(j)) * p.coeffs[n])
            if j < n:
                p = p * g
        return Poly(out, n)

    def __repr__(self):
        return "RiordanArray(%r, %r, %s)" % (self.f, self.g, self.flavor)


def lagrange_pair(a: Series) -> Series:
    """The series b with (1, x/a)^{-1} = (1, x*b); needs a(0) = 1."""
    if a.coeffs[0] != 1:
        raise DomainError("lagrange_pair needs a(0) = 1")
    return a.inverse().mul_x().reversion().div_x()


def table_row(b: Series, a: Series, phi, v: int, k: int, order: int) -> Series:
    """Row k of the v-th diagonal re-reading of the doubly infinite table
    whose row k has generating function b*a^(phi*k).

    v = 0 returns b*a^(phi*k) itself; positive v re-reads ascending
    diagonals, negative v descending ones.
    """
    phi = _q(phi)
    if a.coeffs[0] != 1:
        raise DomainError("table_row needs a(0) = 1")
    if b.coeffs[0] == 0:
        raise DomainError("table_row needs b(0) != 0")
    if min(a.order, b.order) < order:
        raise RangeError("series orders too small for the requested order")
    beta = v * phi
    if beta == 0:
        return (b * a.pow(phi * k)).truncate(order)
    h = a.pow(-beta).mul_x().reversion()   # x * (lagrange series)^beta
    lag = a.compose(h)                     # the generalized Lagrange series
    pref = 1 + xdlog(h.div_x())
    row = b.compose(h) * pref * lag.pow(phi * k)
    return row.truncate(order)
