"""Dense exact-rational matrices of small fixed size.

The matrices here act on coefficient column vectors of polynomials whose
declared bound matches the matrix width; ``apply`` enforces that
convention.
"""

from __future__ import annotations

from fractions import Fraction

from .fps import DomainError, Poly, Q, _q

_SCALARS = (int, Fraction)


class FinMatrix:
    __slots__ = ("n_rows", "n_cols", "data")

    def __init__(self, rows):
        data = [[_q(v) for v in row] for row in rows]
        if not data or not data[0]:
            raise ValueError("matrix needs at least one entry")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        self.data = data
        self.n_rows = len(data)
        self.n_cols = width

    # -- constructors --------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "FinMatrix":
        return cls([[Q(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "FinMatrix":
        return cls([[Q(0)] * cols for _ in range(rows)])

    @classmethod
    def diag(cls, entries) -> "FinMatrix":
        entries = [_q(e) for e in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else Q(0) for j in range(n)]
                    for i in range(n)])

    @classmethod
    def from_columns(cls, polys, n_rows: int) -> "FinMatrix":
        """Column j holds the coefficients of polys[j], padded to n_rows."""
        cols = []
        for p in polys:
            if isinstance(p, Poly):
                if p.degree() > n_rows - 1:
                    raise DomainError("column polynomial too long for the matrix")
                cols.append([p.coeff(i) for i in range(n_rows)])
            else:
                coeffs = [_q(v) for v in p]
                if len(coeffs) > n_rows:
                    raise DomainError("column too long for the matrix")
                coeffs.extend([Q(0)] * (n_rows - len(coeffs)))
                cols.append(coeffs)
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n_rows)])

    # -- accessors -------------------------------------------------------

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def row(self, i: int):
        return list(self.data[i])

    def column(self, j: int):
        return [self.data[i][j] for i in range(self.n_rows)]

    def column_poly(self, j: int) -> Poly:
        return Poly(self.column(j), self.n_rows - 1)

    def column_sums(self):
        return [sum(self.column(j), Q(0)) for j in range(self.n_cols)]

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __eq__(self, other):
        if not isinstance(other, FinMatrix):
            return NotImplemented
        return (self.n_rows == other.n_rows and self.n_cols == other.n_cols
                and self.data == other.data)

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FinMatrix):
            return NotImplemented
        self._shape_check(other)
        return FinMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        if not isinstance(other, FinMatrix):
            return NotImplemented
        self._shape_check(other)
        return FinMatrix([[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return FinMatrix([[-a for a in row] for row in self.data])

    def _shape_check(self, other):
        if self.n_rows != other.n_rows or self.n_cols != other.n_cols:
            raise DomainError("matrix shapes differ")

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            q = _q(other)
            return FinMatrix([[a * q for a in row] for row in self.data])
        if not isinstance(other, FinMatrix):
            return NotImplemented
        if self.n_cols != other.n_rows:
            raise DomainError("inner matrix dimensions differ")
        bt = list(zip(*other.data))
        return FinMatrix([[sum(a * b for a, b in zip(row, col) if a and b) or Q(0)
                           for col in bt] for row in self.data])

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if not self.is_square():
            raise DomainError("powers need a square matrix")
        if not isinstance(k, int):
            raise DomainError("matrix powers need integer exponents")
        if k < 0:
            return self.inverse() ** (-k)
        out = FinMatrix.identity(self.n_rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def transpose(self) -> "FinMatrix":
        return FinMatrix([list(col) for col in zip(*self.data)])

    def inverse(self) -> "FinMatrix":
        """Gauss-Jordan elimination over Q."""
        if not self.is_square():
            raise DomainError("only square matrices invert")
        n = self.n_rows
        work = [list(row) for row in self.data]
        out = [[Q(int(i == j)) for j in range(n)] for i in range(n)]
        for i in range(n):
            pivot = next((r for r in range(i, n) if work[r][i] != 0), None)
            if pivot is None:
                raise DomainError("matrix is singular")
            if pivot != i:
                work[i], work[pivot] = work[pivot], work[i]
                out[i], out[pivot] = out[pivot], out[i]
            inv = 1 / work[i][i]
            work[i] = [v * inv for v in work[i]]
            out[i] = [v * inv for v in out[i]]
            for r in range(n):
                if r != i and work[r][i] != 0:
                    f = work[r][i]
                    work[r] = [a - f * b for a, b in zip(work[r], work[i])]
                    out[r] = [a - f * b for a, b in zip(out[r], out[i])]
        return FinMatrix(out)

    def apply(self, poly: Poly) -> Poly:
        """Act on the coefficient column of a bound-(cols-1) polynomial."""
        if poly.bound != self.n_cols - 1:
            raise DomainError(
                "polynomial bound %d does not match matrix width %d"
                % (poly.bound, self.n_cols))
        vec = poly.coeffs
        out = [sum(a * v for a, v in zip(row, vec) if a and v) or Q(0)
               for row in self.data]
        return Poly(out, self.n_rows - 1)

    def minor(self) -> "FinMatrix":
        """Strip the first row and column."""
        if self.n_rows < 2 or self.n_cols < 2:
            raise DomainError("matrix too small to strip")
        return FinMatrix([row[1:] for row in self.data[1:]])

    def __repr__(self):
        rows = "; ".join(" ".join(str(v) for v in row) for row in self.data)
        return "FinMatrix[%s]" % rows
