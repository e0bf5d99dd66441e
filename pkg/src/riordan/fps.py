"""Truncated formal power series and bounded-degree polynomials over Q.

Coefficients are ``fractions.Fraction`` throughout; nothing here ever
rounds.  A :class:`Series` carries an explicit truncation order, and
binary operations return the smaller order of the two operands, so no
coefficient is ever fabricated beyond what both inputs determine.

A :class:`Poly` is exact (not truncated) and carries a declared degree
bound that may exceed its true degree; the reversal operator depends on
the bound, not the degree.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

Q = Fraction


class DomainError(ValueError):
    """An algebraic precondition does not hold."""


class RangeError(IndexError):
    """An index or truncation order is outside the materialized range."""


class ConsistencyError(ArithmeticError):
    """Two independent computation routes disagree."""


class PoleError(DomainError):
    """A closed-form coefficient hits a pole of its parameters."""


def _q(value) -> Fraction:
    """Coerce to an exact rational; floats are rejected on purpose."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError("not an exact rational: %r" % (value,))


_SCALARS = (int, Fraction)


class Poly:
    """Dense exact-rational polynomial with an explicit degree bound."""

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs, bound=None):
        coeffs = [_q(c) for c in coeffs]
        if bound is None:
            bound = len(coeffs) - 1 if coeffs else 0
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        if len(coeffs) > bound + 1:
            if any(c != 0 for c in coeffs[bound + 1:]):
                raise DomainError("degree exceeds declared bound")
            coeffs = coeffs[: bound + 1]
        coeffs.extend([Q(0)] * (bound + 1 - len(coeffs)))
        self.coeffs = coeffs
        self.bound = bound

    @classmethod
    def zero(cls, bound=0) -> "Poly":
        return cls([], bound)

    @classmethod
    def one(cls, bound=0) -> "Poly":
        return cls([1], bound)

    @classmethod
    def monomial(cls, k: int, c=1, bound=None) -> "Poly":
        return cls([Q(0)] * k + [_q(c)], k if bound is None else bound)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Q(0)

    def degree(self) -> int:
        """True degree (0 for the zero polynomial)."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return 0

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def with_bound(self, bound: int) -> "Poly":
        return Poly(self.coeffs, bound)

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(k) == other.coeff(k) for k in range(n))

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        bound = max(self.bound, other.bound)
        return Poly([self.coeff(k) + other.coeff(k) for k in range(bound + 1)], bound)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.bound)

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            q = _q(other)
            return Poly([c * q for c in self.coeffs], self.bound)
        if not isinstance(other, Poly):
            return NotImplemented
        bound = self.bound + other.bound
        out = [Q(0)] * (bound + 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                if cj != 0:
                    out[i + j] += ci * cj
        return Poly(out, bound)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("polynomial powers need a nonnegative integer exponent")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def eval(self, point) -> Fraction:
        point = _q(point)
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def shift(self, phi) -> "Poly":
        """Argument shift c(x) -> c(x + phi), exact for rational phi."""
        phi = _q(phi)
        if phi == 0:
            return Poly(self.coeffs, self.bound)
        out = [Q(0)] * (self.bound + 1)
        for i in range(self.bound + 1):
            acc = Q(0)
            p = Q(1)
            for j in range(i, self.bound + 1):
                acc += self.coeffs[j] * comb(j, i) * p
                p *= phi
            out[i] = acc
        return Poly(out, self.bound)

    def reverse(self) -> "Poly":
        """Coefficient reversal relative to the declared bound."""
        return Poly(list(reversed(self.coeffs)), self.bound)

    def derivative(self) -> "Poly":
        if self.bound == 0:
            return Poly.zero()
        return Poly([k * self.coeffs[k] for k in range(1, self.bound + 1)],
                    self.bound - 1)

    def divexact(self, divisor: "Poly") -> "Poly":
        """Exact polynomial division; raises on a nonzero remainder."""
        d = divisor.degree()
        if divisor.coeff(d) == 0:
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = divisor.coeff(d)
        out = [Q(0)] * max(len(rem) - d, 1)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            out[k - d] = q
            for j in range(d + 1):
                rem[k - d + j] -= q * divisor.coeff(j)
        if any(c != 0 for c in rem):
            raise DomainError("inexact polynomial division")
        bound = max(self.bound - d, 0)
        return Poly(out, max(bound, len(out) - 1))

    def to_series(self, order: int) -> "Series":
        """Exact embedding: a polynomial determines every coefficient."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        if self.degree() > order:
            raise DomainError("polynomial degree exceeds requested order")
        return Series([self.coeff(k) for k in range(order + 1)], order)

    def __repr__(self):
        return "Poly(%s, bound=%d)" % ([str(c) for c in self.coeffs], self.bound)


class Series:
    """Formal power series truncated at a fixed order (inclusive)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [_q(c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list")
            order = len(coeffs) - 1
        if order < 0 or len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.coeffs = coeffs
        self.order = order

    # -- constructors ------------------------------------------------

    @classmethod
    def from_poly(cls, coeffs, order: int) -> "Series":
        """Declare a polynomial as an exact series at the given order."""
        if isinstance(coeffs, Poly):
            return coeffs.to_series(order)
        return Poly(coeffs).to_series(order)

    @classmethod
    def const(cls, c, order: int) -> "Series":
        return cls.from_poly([c], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.const(1, order)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls.const(0, order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls.from_poly([0, 1], order)

    @classmethod
    def geometric(cls, order: int) -> "Series":
        """1/(1-x)."""
        return cls([Q(1)] * (order + 1), order)

    # -- basics ------------------------------------------------------

    def coeff(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise RangeError("coefficient %d beyond truncation order %d" % (k, self.order))
        return self.coeffs[k]

    __getitem__ = coeff

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise RangeError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], order)

    def poly_part(self, bound=None) -> Poly:
        """The materialized coefficients as an exact polynomial."""
        if bound is None:
            bound = self.order
        if bound > self.order:
            raise RangeError("bound beyond truncation order")
        return Poly(self.coeffs[: bound + 1], bound)

    def __eq__(self, other):
        """Coefficient-wise equality up to the smaller order."""
        if isinstance(other, _SCALARS):
            other = Series.const(other, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            q = _q(other)
            out = list(self.coeffs)
            out[0] += q
            return Series(out, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            return self + (-_q(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            q = _q(other)
            return Series([c * q for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        out = [Q(0)] * (n + 1)
        for i in range(n + 1):
            ci = self.coeffs[i]
            if ci == 0:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if cj != 0:
                    out[i + j] += ci * cj
        return Series(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        """Multiplicative inverse; needs a nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise DomainError("division by a series with zero constant term")
        out = [1 / c0]
        for k in range(1, self.order + 1):
            acc = Q(0)
            for j in range(1, k + 1):
                if self.coeffs[j] != 0:
                    acc += self.coeffs[j] * out[k - j]
            out.append(-acc / c0)
        return Series(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            q = _q(other)
            if q == 0:
                raise ZeroDivisionError("series divided by zero")
            return Series([c / q for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, _SCALARS):
            return self.inverse() * _q(other)
        return NotImplemented

    def mul_x(self) -> "Series":
        """Multiply by x; the order grows by one (coefficients all known)."""
        return Series([Q(0)] + self.coeffs, self.order + 1)

    def div_x(self) -> "Series":
        """Divide by x; needs a zero constant term, order drops by one."""
        if self.coeffs[0] != 0:
            raise DomainError("not divisible by x")
        if self.order == 0:
            raise RangeError("order too small to divide by x")
        return Series(self.coeffs[1:], self.order - 1)

    # -- composition and reversion -------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """self(inner(x)); the inner series needs a zero constant term."""
        if inner.coeffs[0] != 0:
            raise DomainError("composition needs zero constant term inside")
        n = min(self.order, inner.order)
        g = inner.truncate(n)
        acc = Series.const(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc * g + self.coeffs[k]
        return acc

    def reversion(self) -> "Series":
        """Compositional inverse, solved coefficient by coefficient and
        cross-checked against the coefficient-extraction formula."""
        n = self.order
        if n < 1 or self.coeffs[0] != 0:
            raise DomainError("reversion needs zero constant term and order >= 1")
        g1 = self.coeffs[1]
        if g1 == 0:
            raise DomainError("reversion needs a nonzero linear coefficient")
        h = [Q(0), 1 / g1]
        for k in range(2, n + 1):
            partial = Series(h + [Q(0)] * (k + 1 - len(h)), k)
            value = self.truncate(k).compose(partial).coeffs[k]
            h.append(-value / g1)
        direct = Series(h, n)
        if direct != self._reversion_extraction():
            raise ConsistencyError("reversion routes disagree")
        return direct

    def _reversion_extraction(self) -> "Series":
        """Reversion through [x^n] of powers of x/self."""
        n = self.order
        v = self.div_x().inverse()
        out = [Q(0)]
        power = Series.one(n - 1)
        for m in range(1, n + 1):
            power = power * v
            out.append(power.coeffs[m - 1] / m)
        return Series(out, n)

    # -- transcendental-style operations -------------------------------

    def derivative(self) -> "Series":
        if self.order == 0:
            raise RangeError("derivative of an order-0 truncation is unknown")
        return Series([k * self.coeffs[k] for k in range(1, self.order + 1)],
                      self.order - 1)

    def log(self) -> "Series":
        if self.coeffs[0] != 1:
            raise DomainError("log needs constant term 1")
        if self.order == 0:
            return Series([Q(0)], 0)
        d = self.derivative() / self.truncate(self.order - 1)
        out = [Q(0)] + [d.coeffs[k - 1] / k for k in range(1, self.order + 1)]
        return Series(out, self.order)

    def exp(self) -> "Series":
        if self.coeffs[0] != 0:
            raise DomainError("exp needs zero constant term")
        out = [Q(1)]
        for k in range(1, self.order + 1):
            acc = Q(0)
            for j in range(1, k + 1):
                if self.coeffs[j] != 0:
                    acc += j * self.coeffs[j] * out[k - j]
            out.append(acc / k)
        return Series(out, self.order)

    def pow(self, exponent) -> "Series":
        """Rational power.  Integer exponents work for any invertible
        series; fractional ones need constant term 1.  Negative
        exponents go through the reciprocal of the positive power."""
        e = _q(exponent)
        if e < 0:
            return self.pow(-e).inverse()
        if e.denominator == 1:
            k = e.numerator
            out = Series.one(self.order)
            base = self
            while k:
                if k & 1:
                    out = out * base
                k >>= 1
                if k:
                    base = base * base
            return out
        if self.coeffs[0] != 1:
            raise DomainError("fractional powers need constant term 1")
        return (self.log() * e).exp()

    __pow__ = pow

    def sqrt(self) -> "Series":
        return self.pow(Q(1, 2))

    def __repr__(self):
        return "Series(%s, order=%d)" % ([str(c) for c in self.coeffs], self.order)


def xdlog(a: Series) -> Series:
    """x * (log a)' at the order of ``a``; needs constant term 1."""
    if a.coeffs[0] != 1:
        raise DomainError("logarithmic derivative needs constant term 1")
    if a.order == 0:
        raise RangeError("order too small")
    return (a.derivative() / a.truncate(a.order - 1)).mul_x()
