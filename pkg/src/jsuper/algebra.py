"""Structure-constant superalgebras of type (m, n) and their basis changes.

A point of the variety is the tuple (c, rho, gamma):

    e_i e_j = sum_k c[i][j][k] e_k
    e_i f_j = sum_k rho[i][j][k] f_k
    f_i f_j = sum_k gamma[i][j][k] e_k

with c symmetric and gamma skew-symmetric in (i, j).  Products not listed in
a catalog entry default to zero; the symmetric/skew closure is applied when
an algebra is built from a product list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import DomainError, Scalar, ZERO, ONE
from .linalg import Matrix, SingularMatrixError

EVEN = 0
ODD = 1

#: family parameter sample values used for symbolic/sampled consistency runs
PARAM_SAMPLES = (Fraction(2), Fraction(-1), Fraction(1, 3), Fraction(5))


@dataclass(frozen=True)
class ParamSpec:
    """One declared family parameter with its admissible domain."""

    name: str
    domain: str  # "nonzero" | "any" | "nonzero_not_one"

    def admissible(self, value: Fraction) -> bool:
        if self.domain == "nonzero":
            return value != 0
        if self.domain == "nonzero_not_one":
            return value != 0 and value != 1
        if self.domain == "any":
            return True
        raise ValueError(f"unknown parameter domain {self.domain!r}")

    def samples(self):
        return tuple(v for v in PARAM_SAMPLES if self.admissible(v))


class GradedVector:
    """Element of the Z2-graded space: even and odd coordinate tuples."""

    __slots__ = ("even", "odd")

    def __init__(self, even, odd):
        self.even = tuple(Scalar.of(x) for x in even)
        self.odd = tuple(Scalar.of(x) for x in odd)

    @property
    def parity(self) -> str:
        has_even = any(self.even)
        has_odd = any(self.odd)
        if has_even and has_odd:
            return "mixed"
        if has_odd:
            return "odd"
        return "even"

    def is_zero(self) -> bool:
        return not (any(self.even) or any(self.odd))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedVector)
            and self.even == other.even
            and self.odd == other.odd
        )

    __hash__ = None

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.even):
            if c:
                parts.append(f"({c})*e{i + 1}")
        for i, c in enumerate(self.odd):
            if c:
                parts.append(f"({c})*f{i + 1}")
        return " + ".join(parts) if parts else "0"


class SuperAlgebra:
    """Immutable structure-constant superalgebra of type (m, n)."""

    __slots__ = ("m", "n", "c", "rho", "gamma", "params", "name", "_cache")

    def __init__(self, m, n, c, rho, gamma, params=(), name=None):
        self.m = m
        self.n = n
        self.c = tuple(tuple(tuple(Scalar.of(x) for x in row) for row in plane) for plane in c)
        self.rho = tuple(tuple(tuple(Scalar.of(x) for x in row) for row in plane) for plane in rho)
        self.gamma = tuple(tuple(tuple(Scalar.of(x) for x in row) for row in plane) for plane in gamma)
        self.params = tuple(params)
        self.name = name
        self._cache = {}
        if len(self.c) != m or any(len(p) != m for p in self.c) or any(len(r) != m for p in self.c for r in p):
            raise ValueError("c must be m x m x m")
        if len(self.rho) != m or any(len(p) != n for p in self.rho) or any(len(r) != n for p in self.rho for r in p):
            raise ValueError("rho must be m x n x n")
        if len(self.gamma) != n or any(len(p) != n for p in self.gamma) or any(len(r) != m for p in self.gamma for r in p):
            raise ValueError("gamma must be n x n x m")
        if len(self.params) > 1:
            raise ValueError("at most one family parameter per entry")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(m: int, n: int, name=None) -> "SuperAlgebra":
        c = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
        rho = [[[ZERO] * n for _ in range(n)] for _ in range(m)]
        gamma = [[[ZERO] * m for _ in range(n)] for _ in range(n)]
        return SuperAlgebra(m, n, c, rho, gamma, name=name)

    @staticmethod
    def from_products(m, n, products, params=(), name=None) -> "SuperAlgebra":
        """Build from (kind, i, j, value) product entries, applying the
        symmetric/skew closure.  kind is "ee", "ef" or "ff"; value is a
        GradedVector.  Duplicate ordered pairs are rejected.
        """
        c = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
        rho = [[[ZERO] * n for _ in range(n)] for _ in range(m)]
        gamma = [[[ZERO] * m for _ in range(n)] for _ in range(n)]
        seen = set()
        for kind, i, j, value in products:
            key = (kind, i, j)
            if key in seen or (kind == "ee" and ("ee", j, i) in seen) or (
                kind == "ff" and ("ff", j, i) in seen
            ):
                raise ValueError(f"duplicate product for pair {key}")
            seen.add(key)
            if kind == "ee":
                if any(value.odd):
                    raise ValueError("parity violation: even*even must be even")
                for k, x in enumerate(value.even):
                    c[i][j][k] = x
                    c[j][i][k] = x
            elif kind == "ef":
                if any(value.even):
                    raise ValueError("parity violation: even*odd must be odd")
                for k, x in enumerate(value.odd):
                    rho[i][j][k] = x
            elif kind == "ff":
                if any(value.odd):
                    raise ValueError("parity violation: odd*odd must be even")
                if i == j and not value.is_zero():
                    raise ValueError("f_i f_i must vanish by supercommutativity")
                for k, x in enumerate(value.even):
                    gamma[i][j][k] = x
                    gamma[j][i][k] = -x
            else:
                raise ValueError(f"unknown product kind {kind!r}")
        return SuperAlgebra(m, n, c, rho, gamma, params=params, name=name)

    # -- basic structure -------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.m + self.n

    def is_family(self) -> bool:
        return bool(self.params)

    def is_zero_algebra(self) -> bool:
        return not self._nonzero_constants()

    def _nonzero_constants(self) -> bool:
        return (
            any(x for pl in self.c for row in pl for x in row)
            or any(x for pl in self.rho for row in pl for x in row)
            or any(x for pl in self.gamma for row in pl for x in row)
        )

    def same_constants(self, other: "SuperAlgebra") -> bool:
        """Bit-exact equality of structure constants (same type required)."""
        if (self.m, self.n) != (other.m, other.n):
            return False
        return self.c == other.c and self.rho == other.rho and self.gamma == other.gamma

    def basis_even(self, i: int) -> GradedVector:
        return GradedVector([ONE if k == i else ZERO for k in range(self.m)], [ZERO] * self.n)

    def basis_odd(self, j: int) -> GradedVector:
        return GradedVector([ZERO] * self.m, [ONE if k == j else ZERO for k in range(self.n)])

    # combined basis indices: 0..m-1 even, m..m+n-1 odd
    def parity_of(self, idx: int) -> int:
        return EVEN if idx < self.m else ODD

    def basis_products(self):
        """Sparse table: (i, j) combined indices -> {combined index: Scalar}.

        Odd results are indexed m + k.  The table carries the full
        supercommutative closure, so both orders are present.
        """
        tab = self._cache.get("prod")
        if tab is not None:
            return tab
        m, n = self.m, self.n
        tab = {}
        for i in range(m):
            for j in range(m):
                entry = {k: x for k, x in enumerate(self.c[i][j]) if x}
                if entry:
                    tab[(i, j)] = entry
        for i in range(m):
            for j in range(n):
                entry = {m + k: x for k, x in enumerate(self.rho[i][j]) if x}
                if entry:
                    tab[(i, m + j)] = entry
                    tab[(m + j, i)] = entry  # f*e = e*f, sign +1
        for i in range(n):
            for j in range(n):
                entry = {k: x for k, x in enumerate(self.gamma[i][j]) if x}
                if entry:
                    tab[(m + i, m + j)] = entry
        self._cache["prod"] = tab
        return tab

    def sparse_product(self, u: dict, v: dict) -> dict:
        """Product of sparse coordinate vectors over the combined index set."""
        if not u or not v:
            return {}
        tab = self.basis_products()
        out: dict = {}
        for i, ci in u.items():
            for j, cj in v.items():
                base = tab.get((i, j))
                if not base:
                    continue
                f = ci * cj
                if not f:
                    continue
                for k, val in base.items():
                    acc = out.get(k)
                    acc = f * val if acc is None else acc + f * val
                    if acc:
                        out[k] = acc
                    else:
                        out.pop(k, None)
        return out

    def product(self, x: GradedVector, y: GradedVector) -> GradedVector:
        """Bilinear extension of the basis products."""
        if len(x.even) != self.m or len(x.odd) != self.n:
            raise ValueError("x has wrong dimensions for this algebra")
        if len(y.even) != self.m or len(y.odd) != self.n:
            raise ValueError("y has wrong dimensions for this algebra")
        u = {i: c for i, c in enumerate(x.even) if c}
        u.update({self.m + i: c for i, c in enumerate(x.odd) if c})
        v = {i: c for i, c in enumerate(y.even) if c}
        v.update({self.m + i: c for i, c in enumerate(y.odd) if c})
        res = self.sparse_product(u, v)
        even = [res.get(k, ZERO) for k in range(self.m)]
        odd = [res.get(self.m + k, ZERO) for k in range(self.n)]
        return GradedVector(even, odd)

    # -- parameter handling -----------------------------------------------------

    def subs_param(self, value) -> "SuperAlgebra":
        """Specialize the family parameter p := value.

        value may be a rational (checked against the declared domain) or any
        Scalar, e.g. a curve t^-1 used by a family degeneration.
        """
        if not self.params:
            return self
        spec = self.params[0]
        sval = Scalar.of(value)
        if sval.is_rational() and not spec.admissible(sval.as_fraction()):
            raise DomainError(
                f"value {sval} outside the domain {spec.domain!r} of {spec.name}"
            )

        def sub3(tensor):
            return [[[x.subs_p(sval) for x in row] for row in pl] for pl in tensor]

        return SuperAlgebra(
            self.m,
            self.n,
            sub3(self.c),
            sub3(self.rho),
            sub3(self.gamma),
            params=(),
            name=None if self.name is None else f"{self.name}@{sval}",
        )

    def drop_unused_params(self) -> "SuperAlgebra":
        """Forget the parameter declaration when no constant mentions p."""
        if not self.params:
            return self
        used = any(
            not x.is_param_free()
            for tensor in (self.c, self.rho, self.gamma)
            for pl in tensor
            for row in pl
            for x in row
        )
        if used:
            return self
        out = SuperAlgebra(self.m, self.n, self.c, self.rho, self.gamma, params=(), name=self.name)
        return out

    def __repr__(self) -> str:
        label = self.name or f"type ({self.m},{self.n})"
        return f"SuperAlgebra({label})"


class BasisChange:
    """An invertible graded change of basis (T, S); checked on construction."""

    __slots__ = ("T", "S")

    def __init__(self, T: Matrix, S: Matrix):
        if T.rows != T.cols or S.rows != S.cols:
            raise SingularMatrixError("T and S must be square")
        if not T.is_invertible() or not S.is_invertible():
            raise SingularMatrixError("basis change must be invertible")
        self.T = T
        self.S = S

    @staticmethod
    def identity(m: int, n: int) -> "BasisChange":
        return BasisChange(Matrix.identity(m), Matrix.identity(n))

    def compose(self, other: "BasisChange") -> "BasisChange":
        """The change 'self then other' (columns are new basis vectors)."""
        return BasisChange(self.T * other.T, self.S * other.S)


def apply_basis_change(J: SuperAlgebra, g: BasisChange) -> SuperAlgebra:
    """Structure constants of J written in the new basis {T e_k, S f_l}.

    Column k of T holds the coordinates of the new even vector E_k, matching
    T(e_k) = sum_i T[i][k] e_i; likewise for S.
    """
    m, n = J.m, J.n
    if g.T.rows != m or g.S.rows != n:
        raise ValueError("basis change has wrong dimensions")
    Tinv = g.T.inverse()
    Sinv = g.S.inverse()
    T, S = g.T, g.S

    def to_new(vec: dict, inv: Matrix, size: int):
        out = [ZERO] * size
        for k in range(size):
            acc = ZERO
            for d, val in vec.items():
                x = inv.a[k][d]
                if x and val:
                    acc = acc + x * val
            out[k] = acc
        return out

    c = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    rho = [[[ZERO] * n for _ in range(n)] for _ in range(m)]
    gamma = [[[ZERO] * m for _ in range(n)] for _ in range(n)]

    for i in range(m):
        for j in range(m):
            vec: dict = {}
            for a in range(m):
                ta = T.a[a][i]
                if not ta:
                    continue
                for b in range(m):
                    tb = T.a[b][j]
                    if not tb:
                        continue
                    f = ta * tb
                    for d, val in enumerate(J.c[a][b]):
                        if val:
                            vec[d] = vec.get(d, ZERO) + f * val
            if vec:
                c[i][j] = to_new(vec, Tinv, m)
    for i in range(m):
        for j in range(n):
            vec = {}
            for a in range(m):
                ta = T.a[a][i]
                if not ta:
                    continue
                for b in range(n):
                    sb = S.a[b][j]
                    if not sb:
                        continue
                    f = ta * sb
                    for d, val in enumerate(J.rho[a][b]):
                        if val:
                            vec[d] = vec.get(d, ZERO) + f * val
            if vec:
                rho[i][j] = to_new(vec, Sinv, n)
    for i in range(n):
        for j in range(n):
            vec = {}
            for a in range(n):
                sa = S.a[a][i]
                if not sa:
                    continue
                for b in range(n):
                    sb = S.a[b][j]
                    if not sb:
                        continue
                    f = sa * sb
                    for d, val in enumerate(J.gamma[a][b]):
                        if val:
                            vec[d] = vec.get(d, ZERO) + f * val
            if vec:
                gamma[i][j] = to_new(vec, Tinv, m)

    return SuperAlgebra(m, n, c, rho, gamma, params=J.params, name=None)


def verify_iso_certificate(J: SuperAlgebra, J2: SuperAlgebra, g: BasisChange) -> bool:
    """True iff the change of basis g carries J exactly onto J2."""
    if (J.m, J.n) != (J2.m, J2.n):
        raise ValueError("type mismatch")
    return apply_basis_change(J, g).same_constants(J2)
