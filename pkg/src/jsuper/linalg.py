"""Dense exact linear algebra over Q(t, p).

Every instance in the toolkit is at most 25x25, so plain Gaussian
elimination over the field plus a fraction-free Bareiss route (used as the
independent rank oracle) are all that is needed.
"""

from __future__ import annotations

from fractions import Fraction

from .field import LaurentPoly, Scalar, ZERO, ONE, _P_ONE


class SingularMatrixError(ValueError):
    pass


class Matrix:
    """Immutable dense matrix of Scalars."""

    __slots__ = ("rows", "cols", "a")

    def __init__(self, rows_data):
        data = [tuple(Scalar.of(x) for x in row) for row in rows_data]
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if any(len(r) != self.cols for r in data):
            raise ValueError("ragged rows")
        self.a = tuple(data)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "Matrix":
        return Matrix([[ZERO] * c for _ in range(r)])

    def __getitem__(self, ij):
        i, j = ij
        return self.a[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(self.a[i][j] == other.a[i][j] for i in range(self.rows) for j in range(self.cols))
        )

    __hash__ = None

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    x = self.a[i][k]
                    y = other.a[k][j]
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def matvec(self, v):
        if self.cols != len(v):
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            acc = ZERO
            for k in range(self.cols):
                x = self.a[i][k]
                if x and v[k]:
                    acc = acc + x * v[k]
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        return Matrix([[self.a[i][j] for i in range(self.rows)] for j in range(self.cols)])

    # -- elimination ---------------------------------------------------------

    def _echelon(self, row_order=None):
        """Row echelon form by field Gaussian elimination.

        Returns (rows as mutable lists, pivot column list).  ``row_order``
        permutes the initial rows and thereby the pivoting choices, which is
        enough to realize "any row permutation strategy" for the rank law.
        """
        order = row_order if row_order is not None else range(self.rows)
        m = [list(self.a[i]) for i in order]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, len(m)):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv if x else x for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return m, pivots

    def rref(self):
        m, pivots = self._echelon()
        return Matrix(m), pivots

    def rank(self, row_order=None) -> int:
        return len(self._echelon(row_order)[1])

    def rank_bareiss(self) -> int:
        """Fraction-free rank: clear row denominators, then Bareiss on the
        polynomial entries with exact divisions only."""
        rows = []
        for row in self.a:
            den = _P_ONE
            for x in row:
                den = den * x.den
            cleared = []
            for x in row:
                cleared.append(x.num * den.exact_div(x.den))
            rows.append(cleared)
        n, m = len(rows), self.cols
        prev = None
        r = 0
        for c in range(m):
            pr = None
            for i in range(r, n):
                if not rows[i][c].is_zero():
                    pr = i
                    break
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            piv = rows[r][c]
            for i in range(r + 1, n):
                for j in range(c + 1, m):
                    val = rows[i][j] * piv - rows[i][c] * rows[r][j]
                    if prev is not None:
                        val = val.exact_div(prev)
                    rows[i][j] = val
                rows[i][c] = LaurentPoly()
            prev = piv
            r += 1
        return r

    def nullspace(self):
        """Canonical basis of the right kernel, pivot-normalized.

        For each free column j the basis vector has entry 1 at j and the
        negated reduced column above the pivots.
        """
        red, pivots = self._echelon()
        pivset = set(pivots)
        basis = []
        for j in range(self.cols):
            if j in pivset:
                continue
            v = [ZERO] * self.cols
            v[j] = ONE
            for r, pc in enumerate(pivots):
                if red[r][j]:
                    v[pc] = -red[r][j]
            basis.append(tuple(v))
        return basis

    def det(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.a]
        n = self.rows
        det = ONE
        sign = 1
        for c in range(n):
            pr = None
            for i in range(c, n):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                return ZERO
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                sign = -sign
            piv = m[c][c]
            det = det * piv
            inv = piv.inverse()
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [a - f * b if b else a for a, b in zip(m[i], m[c])]
        return det if sign == 1 else -det

    def is_invertible(self) -> bool:
        return self.rows == self.cols and bool(self.det())

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise SingularMatrixError("non-square matrix")
        n = self.rows
        m = [list(self.a[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        r = 0
        for c in range(n):
            pr = None
            for i in range(r, n):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                raise SingularMatrixError("singular matrix")
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv if x else x for x in m[r]]
            for i in range(n):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
            r += 1
        return Matrix([row[n:] for row in m])

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.a)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


def echelon_basis(vectors, dim: int):
    """Canonical reduced basis of the span of coordinate vectors.

    Vectors are tuples of Scalars of length ``dim``; the result is the RREF
    row basis, a canonical form suitable for subspace equality tests.
    """
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return []
    red, pivots = Matrix(vecs).rref()
    return [tuple(red.a[i]) for i in range(len(pivots))]
